#include "gspline/polyring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace gspline {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

bool valid_identifier(const std::string &s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

} // namespace

Ring RingSpec::make(std::vector<std::string> variables,
                    std::uint32_t characteristic) {
  std::set<std::string> seen;
  for (const auto &v : variables) {
    if (!valid_identifier(v))
      throw InvalidArgument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  if (characteristic != 0 &&
      (characteristic >= (1u << 31) || !is_prime(characteristic)))
    throw InvalidArgument("field characteristic " +
                          std::to_string(characteristic) +
                          " is not a prime below 2^31");
  return Ring(new RingSpec(std::move(variables), characteristic));
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name)
      return i;
  return std::nullopt;
}

std::string RingSpec::field_name() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

void RingSpec::normalize(mpq_class &c) const {
  if (p_ == 0) {
    c.canonicalize();
    return;
  }
  mpz_class num = c.get_num();
  mpz_class den = c.get_den();
  mpz_class mod = p_;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw InvalidArgument("denominator divisible by the characteristic");
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  c = mpq_class(r);
}

mpq_class RingSpec::inverse(const mpq_class &c) const {
  if (sgn(c) == 0)
    throw InvalidArgument("division by zero");
  if (p_ == 0)
    return 1 / c;
  mpz_class inv;
  mpz_class num = c.get_num();
  mpz_class mod = p_;
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return mpq_class(inv);
}

bool same_ring(const Ring &a, const Ring &b) noexcept {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    degree_ += e;
}

bool Monomial::divides(const Monomial &other) const noexcept {
  if (degree_ > other.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = exps_[i] + other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial &divisor) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial &other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial &other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0)
      return false;
  return true;
}

// ------------------------------------------------------------------ orders

namespace {

std::strong_ordering grevlex_cmp(const Monomial &a, const Monomial &b) {
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i])
      return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial &a,
                                            const Monomial &b) const {
  return kind == TermOrder::grevlex ? grevlex_cmp(a, b) : lex_cmp(a, b);
}

std::strong_ordering MonomialOrder::compare(const Monomial &a, std::size_t ca,
                                            const Monomial &b,
                                            std::size_t cb) const {
  if (elimination_block > 0) {
    bool ia = ca < elimination_block, ib = cb < elimination_block;
    if (ia != ib)
      return ia ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (strategy == ModuleStrategy::position_over_term) {
    if (ca != cb)
      return cb <=> ca;
    return compare(a, b);
  }
  auto c = compare(a, b);
  if (c != 0)
    return c;
  return cb <=> ca;
}

std::strong_ordering monomial_compare(const MonomialOrder &order,
                                      const Monomial &a, const Monomial &b) {
  if (a.size() != b.size())
    throw InvalidArgument("monomial length mismatch");
  return order.compare(a, b);
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term &a, const Term &b) {
  return grevlex_cmp(a.monomial, b.monomial) > 0;
}

void check_ring(const Ring &a, const Ring &b) {
  if (!same_ring(a, b))
    throw RingMismatch();
}

} // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  for (auto &t : terms) {
    if (t.monomial.size() != ring_->nvars())
      throw InvalidArgument("monomial length does not match the ring");
    ring_->normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto &t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      ring_->normalize(terms_.back().coeff);
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term &t) { return sgn(t.coeff) == 0; });
}

Polynomial Polynomial::constant(const Ring &ring, const mpq_class &c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::variable(const Ring &ring, std::size_t index) {
  if (index >= ring->nvars())
    throw InvalidArgument("variable index out of range");
  std::vector<std::uint32_t> e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(ring, Monomial(std::move(e)), 1);
}

Polynomial Polynomial::monomial(const Ring &ring, const Monomial &m,
                                const mpq_class &c) {
  std::vector<Term> t;
  t.push_back({m, c});
  return Polynomial(ring, std::move(t));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().monomial.is_one());
}

mpq_class Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one())
    return terms_.back().coeff;
  return 0;
}

long Polynomial::total_degree() const noexcept {
  // grevlex sorts by degree first, so the leading term has maximal degree
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().monomial.degree());
}

std::optional<long> Polynomial::homogeneous_degree() const noexcept {
  if (terms_.empty() ||
      terms_.front().monomial.degree() != terms_.back().monomial.degree())
    return std::nullopt;
  return static_cast<long>(terms_.front().monomial.degree());
}

Polynomial Polynomial::operator-() const {
  return scaled(-1);
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  check_ring(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_greater(terms_[i], o.terms_[j]))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i])) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class c = terms_[i].coeff + o.terms_[j].coeff;
      ring_->normalize(c);
      if (sgn(c) != 0)
        r.terms_.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  check_ring(ring_, o.ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto &a : terms_)
    for (const auto &b : o.terms_)
      prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const mpq_class &c) const {
  mpq_class s = c;
  ring_->normalize(s);
  Polynomial r(ring_);
  if (sgn(s) == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) {
    mpq_class v = t.coeff * s;
    ring_->normalize(v);
    r.terms_.push_back({t.monomial, v});
  }
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial &m,
                                      const mpq_class &c) const {
  Polynomial r = scaled(c);
  for (auto &t : r.terms_)
    t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial &o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == o.terms_[i].monomial) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &t : terms_) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative)
      c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool printed = false;
    if (c != 1 || t.monomial.is_one()) {
      out << c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0)
        continue;
      if (printed)
        out << '*';
      out << ring_->variables()[i];
      if (t.monomial[i] > 1)
        out << '^' << t.monomial[i];
      printed = true;
    }
  }
  return out.str();
}

Polynomial poly_op(PolyOp kind, const Polynomial &f, const Polynomial &g) {
  check_ring(f.ring(), g.ring());
  switch (kind) {
  case PolyOp::add:
    return f + g;
  case PolyOp::sub:
    return f - g;
  case PolyOp::mul:
    return f * g;
  case PolyOp::scale:
    if (!g.is_constant())
      throw InvalidArgument("scale requires a constant factor");
    return f.scaled(g.constant_term());
  }
  throw InvalidArgument("unknown polynomial operation");
}

Homogeneity is_homogeneous(const Polynomial &f) {
  if (f.is_zero())
    return {true, std::nullopt};
  auto d = f.homogeneous_degree();
  return {d.has_value(), d};
}

Polynomial exact_divide(const Polynomial &f, const Polynomial &g) {
  check_ring(f.ring(), g.ring());
  if (g.is_zero())
    throw InvalidArgument("division by the zero polynomial");
  const Ring &ring = f.ring();
  const Term &lead = g.terms().front();
  mpq_class lead_inv = ring->inverse(lead.coeff);
  Polynomial rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term &t = rem.terms().front();
    if (!lead.monomial.divides(t.monomial))
      throw Error("exact_divide: divisor does not divide dividend");
    Monomial m = t.monomial / lead.monomial;
    mpq_class c = t.coeff * lead_inv;
    ring->normalize(c);
    quot.push_back({m, c});
    rem = rem - g.times_monomial(m, c);
  }
  return Polynomial(ring, std::move(quot));
}

// ----------------------------------------------------------- VectorElement

VectorElement::VectorElement(Ring ring, std::size_t rank)
    : ring_(std::move(ring)), shifts_(rank, 0) {
  comps_.assign(rank, Polynomial(ring_));
}

VectorElement::VectorElement(Ring ring, std::vector<int> shifts)
    : ring_(std::move(ring)), shifts_(std::move(shifts)) {
  comps_.assign(shifts_.size(), Polynomial(ring_));
}

VectorElement::VectorElement(std::vector<Polynomial> components,
                             std::vector<int> shifts)
    : comps_(std::move(components)), shifts_(std::move(shifts)) {
  if (comps_.empty())
    throw InvalidArgument("VectorElement needs at least one component; use "
                          "the (ring, rank) constructor for rank 0");
  ring_ = comps_.front().ring();
  for (const auto &c : comps_)
    check_ring(ring_, c.ring());
  if (shifts_.empty())
    shifts_.assign(comps_.size(), 0);
  if (shifts_.size() != comps_.size())
    throw InvalidArgument("shift vector length does not match rank");
}

VectorElement VectorElement::basis(const Ring &ring, std::size_t rank,
                                   std::size_t index, std::vector<int> shifts) {
  if (shifts.empty())
    shifts.assign(rank, 0);
  VectorElement v(ring, std::move(shifts));
  v.set(index, Polynomial::constant(ring, 1));
  return v;
}

void VectorElement::set(std::size_t i, Polynomial p) {
  check_ring(ring_, p.ring());
  comps_.at(i) = std::move(p);
}

void VectorElement::set_shifts(std::vector<int> shifts) {
  if (shifts.size() != comps_.size())
    throw InvalidArgument("shift vector length does not match rank");
  shifts_ = std::move(shifts);
}

bool VectorElement::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Polynomial &p) { return p.is_zero(); });
}

std::optional<long> VectorElement::homogeneous_degree() const noexcept {
  std::optional<long> deg;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero())
      continue;
    auto d = comps_[i].homogeneous_degree();
    if (!d)
      return std::nullopt;
    long total = *d + shifts_[i];
    if (deg && *deg != total)
      return std::nullopt;
    deg = total;
  }
  return deg;
}

VectorElement VectorElement::operator+(const VectorElement &o) const {
  if (o.rank() != rank())
    throw InvalidArgument("rank mismatch");
  VectorElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

VectorElement VectorElement::operator-(const VectorElement &o) const {
  return *this + (-o);
}

VectorElement VectorElement::operator-() const {
  VectorElement r = *this;
  for (auto &c : r.comps_)
    c = -c;
  return r;
}

VectorElement VectorElement::operator*(const Polynomial &f) const {
  VectorElement r = *this;
  for (auto &c : r.comps_)
    c = c * f;
  return r;
}

VectorElement VectorElement::hadamard(const VectorElement &o) const {
  if (o.rank() != rank())
    throw InvalidArgument("rank mismatch");
  VectorElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    r.comps_[i] = comps_[i] * o.comps_[i];
  return r;
}

bool VectorElement::operator==(const VectorElement &o) const {
  return comps_ == o.comps_;
}

std::string VectorElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i)
      s += ", ";
    s += comps_[i].to_string();
  }
  return s + ")";
}

} // namespace gspline
