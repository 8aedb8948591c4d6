#include "gspline/homology.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gspline {

// ------------------------------------------------------ ModulePresentation

ModulePresentation::ModulePresentation(Ring ring, std::vector<int> shifts,
                                       PresentationMode mode,
                                       std::vector<VectorElement> elements)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), mode_(mode) {
  for (auto &e : elements) {
    if (e.rank() != shifts_.size())
      throw InvalidArgument("element rank does not match the ambient module");
    if (!same_ring(e.ring(), ring_))
      throw RingMismatch();
    e.set_shifts(shifts_);
    if (!e.is_zero() && !e.homogeneous_degree())
      graded_ = false;
    elements_.push_back(std::move(e));
  }
}

ModulePresentation ModulePresentation::submodule(
    Ring ring, std::vector<int> ambient_shifts,
    std::vector<VectorElement> generators) {
  return ModulePresentation(std::move(ring), std::move(ambient_shifts),
                            PresentationMode::submodule,
                            std::move(generators));
}

ModulePresentation ModulePresentation::cokernel(
    Ring ring, std::vector<int> ambient_shifts,
    std::vector<VectorElement> relations) {
  return ModulePresentation(std::move(ring), std::move(ambient_shifts),
                            PresentationMode::cokernel, std::move(relations));
}

ModuleMap ModulePresentation::element_map() const {
  return ModuleMap(ring_, shifts_.size(), elements_, shifts_);
}

// ------------------------------------------------------------- resolution

namespace {

std::vector<VectorElement> nonzero(const std::vector<VectorElement> &v) {
  std::vector<VectorElement> out;
  for (const auto &e : v)
    if (!e.is_zero())
      out.push_back(e);
  return out;
}

std::vector<int> degrees_of(const std::vector<VectorElement> &gens) {
  std::vector<int> d;
  for (const auto &g : gens)
    d.push_back(static_cast<int>(*g.homogeneous_degree()));
  return d;
}

ModuleMap erase_row(const ModuleMap &m, std::size_t row) {
  ModuleMap r(m.ring(), m.rows() - 1, m.cols());
  std::vector<int> tgt;
  for (std::size_t i = 0, k = 0; i < m.rows(); ++i) {
    if (i == row)
      continue;
    tgt.push_back(m.target_shifts()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.set(k, j, m.at(i, j));
    ++k;
  }
  r.set_shifts(std::move(tgt), m.source_shifts());
  return r;
}

ModuleMap erase_col(const ModuleMap &m, std::size_t col) {
  ModuleMap r(m.ring(), m.rows(), m.cols() - 1);
  std::vector<int> src;
  for (std::size_t j = 0, k = 0; j < m.cols(); ++j) {
    if (j == col)
      continue;
    src.push_back(m.source_shifts()[j]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      r.set(i, k, m.at(i, j));
    ++k;
  }
  r.set_shifts(m.target_shifts(), std::move(src));
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>>
first_unit(const ModuleMap &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && m.at(i, j).is_constant())
        return std::make_pair(i, j);
  return std::nullopt;
}

// Splits off trivial summands R(-d) <-1- R(-d) until no map has a unit entry.
void prune(FreeResolution &res) {
  auto &maps = res.maps;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    while (auto unit = first_unit(maps[i])) {
      auto [a, b] = *unit;
      ModuleMap &d = maps[i];
      const Ring &ring = d.ring();
      mpq_class inv = ring->inverse(d.at(a, b).constant_term());
      // Clear row a by column operations on F_{i+1}.
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (j == b || d.at(a, j).is_zero())
          continue;
        Polynomial c = d.at(a, j).scaled(inv);
        for (std::size_t k = 0; k < d.rows(); ++k)
          d.set(k, j, d.at(k, j) - c * d.at(k, b));
        if (i + 1 < maps.size()) {
          ModuleMap &next = maps[i + 1];
          for (std::size_t k = 0; k < next.cols(); ++k)
            next.set(b, k, next.at(b, k) + c * next.at(j, k));
        }
      }
      // Clear column b by row operations on F_i.
      for (std::size_t k = 0; k < d.rows(); ++k) {
        if (k == a || d.at(k, b).is_zero())
          continue;
        Polynomial lambda = d.at(k, b).scaled(inv);
        for (std::size_t j = 0; j < d.cols(); ++j)
          d.set(k, j, d.at(k, j) - lambda * d.at(a, j));
        if (i > 0) {
          ModuleMap &prev = maps[i - 1];
          for (std::size_t r = 0; r < prev.rows(); ++r)
            prev.set(r, a, prev.at(r, a) + lambda * prev.at(r, k));
        }
      }
      d = erase_col(erase_row(d, a), b);
      if (i > 0)
        maps[i - 1] = erase_col(maps[i - 1], a);
      if (i + 1 < maps.size())
        maps[i + 1] = erase_row(maps[i + 1], b);
      res.degrees[i].erase(res.degrees[i].begin() + static_cast<std::ptrdiff_t>(a));
      res.degrees[i + 1].erase(res.degrees[i + 1].begin() +
                               static_cast<std::ptrdiff_t>(b));
    }
  }
  while (!res.degrees.empty() && res.degrees.back().empty()) {
    res.degrees.pop_back();
    if (!res.maps.empty())
      res.maps.pop_back();
  }
}

} // namespace

FreeResolution free_resolution(const ModulePresentation &p,
                               std::size_t max_length) {
  if (!p.graded())
    throw NotGraded();
  const Ring &ring = p.ring();
  FreeResolution res;
  ModuleMap current(ring, 0, 0);
  if (p.mode() == PresentationMode::submodule) {
    auto gens = minimal_generators(p.elements());
    if (gens.empty())
      throw ZeroModule();
    res.degrees.push_back(degrees_of(gens));
    current = syzygy_module(gens);
  } else {
    if (p.ambient_rank() == 0)
      throw ZeroModule();
    res.degrees.push_back(p.ambient_shifts());
    auto rels = minimal_generators(nonzero(p.elements()));
    current = ModuleMap(ring, p.ambient_rank(), rels, p.ambient_shifts());
  }
  while (current.cols() > 0) {
    if (res.maps.size() >= max_length + 1)
      throw Error("free resolution exceeded the requested maximal length");
    res.degrees.push_back(current.source_shifts());
    res.maps.push_back(current);
    current = syzygy_module(current.columns());
  }
  prune(res);
  if (res.degrees.empty())
    throw ZeroModule();
  if (res.length() > max_length)
    throw Error("free resolution exceeded the requested maximal length");
  res.minimal = true;
  return res;
}

// ------------------------------------------------------------ BettiTable

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, int count) {
  if (count != 0)
    entries_[{i, j}] += count;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto &[k, v] : entries_)
    pd = std::max(pd, k.first);
  return pd;
}

std::string BettiTable::to_string() const {
  if (entries_.empty())
    return "(zero module)\n";
  int imax = projective_dimension();
  int rmin = 0, rmax = 0;
  bool first = true;
  for (const auto &[k, v] : entries_) {
    int row = k.second - k.first;
    if (first) {
      rmin = rmax = row;
      first = false;
    }
    rmin = std::min(rmin, row);
    rmax = std::max(rmax, row);
  }
  std::ostringstream out;
  out << "      ";
  for (int i = 0; i <= imax; ++i) {
    std::string s = std::to_string(i);
    out << std::string(6 - s.size(), ' ') << s;
  }
  out << '\n';
  out << "total:";
  for (int i = 0; i <= imax; ++i) {
    int total = 0;
    for (const auto &[k, v] : entries_)
      if (k.first == i)
        total += v;
    std::string s = std::to_string(total);
    out << std::string(6 - s.size(), ' ') << s;
  }
  out << '\n';
  for (int row = rmin; row <= rmax; ++row) {
    std::string label = std::to_string(row) + ":";
    out << std::string(6 - label.size(), ' ') << label;
    for (int i = 0; i <= imax; ++i) {
      int v = at(i, i + row);
      std::string s = v == 0 ? "." : std::to_string(v);
      out << std::string(6 - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

BettiTable betti_table(const FreeResolution &res) {
  if (!res.minimal)
    throw InvalidArgument("Betti numbers need a minimal resolution");
  BettiTable t;
  for (std::size_t i = 0; i < res.degrees.size(); ++i)
    for (int d : res.degrees[i])
      t.add(static_cast<int>(i), d);
  return t;
}

// --------------------------------------------------------- HilbertSeries

long long HilbertSeries::numerator_at_one() const {
  long long s = 0;
  for (const auto &[e, c] : numerator)
    s += c;
  return s;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries &o) const {
  // bring both to the larger denominator exponent
  auto lift = [](HilbertSeries h, int target) {
    while (h.denominator_exponent < target) {
      std::map<int, long long> n;
      for (const auto &[e, c] : h.numerator) {
        n[e] += c;
        n[e + 1] -= c;
      }
      std::erase_if(n, [](const auto &kv) { return kv.second == 0; });
      h.numerator = std::move(n);
      ++h.denominator_exponent;
    }
    return h;
  };
  int target = std::max(denominator_exponent, o.denominator_exponent);
  HilbertSeries a = lift(*this, target), b = lift(o, target);
  for (const auto &[e, c] : b.numerator)
    a.numerator[e] += c;
  std::erase_if(a.numerator, [](const auto &kv) { return kv.second == 0; });
  return a;
}

bool HilbertSeries::operator==(const HilbertSeries &o) const {
  HilbertSeries a = reduced(), b = o.reduced();
  if (a.numerator.empty() && b.numerator.empty())
    return true;
  return a.numerator == b.numerator &&
         a.denominator_exponent == b.denominator_exponent;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries h = *this;
  while (h.denominator_exponent > 0 && !h.numerator.empty() &&
         h.numerator_at_one() == 0) {
    // synthetic division by (1 - t): q_k = sum_{e <= k} n_e
    std::map<int, long long> q;
    long long running = 0;
    int lo = h.numerator.begin()->first, hi = h.numerator.rbegin()->first;
    for (int k = lo; k < hi; ++k) {
      auto it = h.numerator.find(k);
      running += it == h.numerator.end() ? 0 : it->second;
      if (running != 0)
        q[k] = running;
    }
    h.numerator = std::move(q);
    --h.denominator_exponent;
  }
  return h;
}

std::string HilbertSeries::numerator_string() const {
  if (numerator.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : numerator) {
    long long a = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << a;
      continue;
    }
    if (a != 1)
      out << a << '*';
    out << 't';
    if (e != 1)
      out << '^' << e;
  }
  return out.str();
}

std::string HilbertSeries::to_string() const {
  std::string num = numerator_string();
  if (denominator_exponent == 0 || numerator.empty())
    return num;
  std::string den = denominator_exponent == 1
                        ? "(1 - t)"
                        : "(1 - t)^" + std::to_string(denominator_exponent);
  return "(" + num + ") / " + den;
}

bool is_zero_module(const ModulePresentation &p) {
  if (p.mode() == PresentationMode::submodule)
    return nonzero(p.elements()).empty();
  if (p.ambient_rank() == 0)
    return true;
  auto rels = nonzero(p.elements());
  if (rels.empty())
    return false;
  auto gb = buchberger(p.ring(), p.ambient_shifts(), rels,
                       MonomialOrder::grevlex());
  for (std::size_t i = 0; i < p.ambient_rank(); ++i)
    if (!in_span(VectorElement::basis(p.ring(), p.ambient_rank(), i,
                                      p.ambient_shifts()),
                 gb))
      return false;
  return true;
}

HilbertSeries hilbert_series(const ModulePresentation &p) {
  if (!p.graded())
    throw NotGraded();
  HilbertSeries h;
  h.denominator_exponent = static_cast<int>(p.ring()->nvars());
  FreeResolution res;
  try {
    res = free_resolution(p, p.ring()->nvars() + 1);
  } catch (const ZeroModule &) {
    return h;
  }
  for (std::size_t i = 0; i < res.degrees.size(); ++i)
    for (int d : res.degrees[i])
      h.numerator[d] += (i % 2 == 0) ? 1 : -1;
  std::erase_if(h.numerator, [](const auto &kv) { return kv.second == 0; });
  return h;
}

int projective_dimension(const ModulePresentation &p) {
  return static_cast<int>(free_resolution(p, p.ring()->nvars() + 1).length());
}

int depth_ab(const ModulePresentation &p) {
  return static_cast<int>(p.ring()->nvars()) - projective_dimension(p);
}

// ------------------------------------------------- regular-sequence depth

namespace {

struct Cokernel {
  std::vector<int> shifts;
  std::vector<VectorElement> relations;
};

Cokernel as_cokernel(const ModulePresentation &p) {
  if (p.mode() == PresentationMode::cokernel)
    return {p.ambient_shifts(), nonzero(p.elements())};
  auto gens = minimal_generators(p.elements());
  if (gens.empty())
    throw ZeroModule();
  ModuleMap syz = syzygy_module(gens);
  return {degrees_of(gens), syz.columns()};
}

Polynomial random_linear_form(const Ring &ring, std::mt19937_64 &rng) {
  for (;;) {
    Polynomial l(ring);
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      long c = static_cast<long>(rng() % 61) - 30;
      l += Polynomial::variable(ring, i).scaled(c);
    }
    if (!l.is_zero())
      return l;
  }
}

// True when multiplication by l is injective on R^k / span(relations).
bool is_nonzerodivisor(const Polynomial &l, const Cokernel &m) {
  const Ring &ring = l.ring();
  const std::size_t k = m.shifts.size();
  std::vector<VectorElement> cols;
  std::vector<int> src;
  for (std::size_t i = 0; i < k; ++i) {
    VectorElement e(ring, m.shifts);
    e.set(i, l);
    cols.push_back(std::move(e));
    src.push_back(m.shifts[i] + 1);
  }
  for (const auto &r : m.relations) {
    cols.push_back(r);
    src.push_back(static_cast<int>(r.homogeneous_degree().value_or(0)));
  }
  ModuleMap map(ring, k, cols, m.shifts, src);
  auto ker = kernel_of_map(map);
  if (ker.empty())
    return true;
  if (m.relations.empty())
    return std::all_of(ker.begin(), ker.end(), [k](const VectorElement &v) {
      for (std::size_t i = 0; i < k; ++i)
        if (!v[i].is_zero())
          return false;
      return true;
    });
  auto gb = buchberger(ring, m.shifts, m.relations, MonomialOrder::grevlex());
  for (const auto &v : ker) {
    VectorElement colon(ring, m.shifts);
    for (std::size_t i = 0; i < k; ++i)
      colon.set(i, v[i]);
    if (!in_span(colon, gb))
      return false;
  }
  return true;
}

} // namespace

int depth_regular_sequence(const ModulePresentation &p, std::uint64_t seed) {
  if (!p.graded())
    throw NotGraded();
  if (is_zero_module(p))
    throw ZeroModule();
  Cokernel m = as_cokernel(p);
  const Ring &ring = p.ring();
  std::mt19937_64 rng(seed);
  int depth = 0;
  const int cap = static_cast<int>(ring->nvars());
  while (depth < cap) {
    bool found = false;
    for (int attempt = 0; attempt < 5 && !found; ++attempt) {
      Polynomial l = random_linear_form(ring, rng);
      if (!is_nonzerodivisor(l, m))
        continue;
      found = true;
      for (std::size_t i = 0; i < m.shifts.size(); ++i) {
        VectorElement e(ring, m.shifts);
        e.set(i, l);
        m.relations.push_back(std::move(e));
      }
    }
    if (!found)
      break;
    ++depth;
  }
  return depth;
}

DepthReport depth_report(const ModulePresentation &p, std::uint64_t seed) {
  DepthReport r;
  r.pd = projective_dimension(p);
  r.depth_ab = static_cast<int>(p.ring()->nvars()) - r.pd;
  r.depth_regseq = depth_regular_sequence(p, seed);
  r.agree = r.depth_ab == r.depth_regseq;
  return r;
}

// ---------------------------------------------------------------- rank

std::size_t fraction_field_rank(const ModuleMap &m) {
  std::vector<std::vector<Polynomial>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i].push_back(m.at(i, j));
  const Ring &ring = m.ring();
  Polynomial prev = Polynomial::constant(ring, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c].is_zero())
      ++piv;
    if (piv == m.rows())
      continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        a[i][j] = exact_divide(a[rank][c] * a[i][j] - a[i][c] * a[rank][j],
                               prev);
      a[i][c] = Polynomial(ring);
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int module_rank(const ModulePresentation &p) {
  if (p.graded())
    return static_cast<int>(hilbert_series(p).numerator_at_one());
  std::size_t r = fraction_field_rank(p.element_map());
  if (p.mode() == PresentationMode::submodule)
    return static_cast<int>(r);
  return static_cast<int>(p.ambient_rank() - r);
}

ModuleInvariants module_invariants(const ModulePresentation &p,
                                   std::optional<std::uint64_t> regseq_seed) {
  if (!p.graded())
    throw NotGraded();
  ModuleInvariants inv;
  const int n = static_cast<int>(p.ring()->nvars());
  inv.hilbert.denominator_exponent = n;
  try {
    inv.resolution = free_resolution(p, p.ring()->nvars() + 1);
  } catch (const ZeroModule &) {
    inv.zero = true;
    return inv;
  }
  inv.betti = betti_table(inv.resolution);
  for (const auto &[key, count] : inv.betti.entries())
    inv.hilbert.numerator[key.second] += (key.first % 2 == 0) ? count : -count;
  std::erase_if(inv.hilbert.numerator,
                [](const auto &kv) { return kv.second == 0; });
  inv.pd = static_cast<int>(inv.resolution.length());
  inv.depth_ab = n - inv.pd;
  inv.rank = static_cast<int>(inv.hilbert.numerator_at_one());
  if (regseq_seed)
    inv.depth_regseq = depth_regular_sequence(p, *regseq_seed);
  return inv;
}

// ------------------------------------------------------------ checks

bool is_exact(const FreeResolution &res) {
  const auto &maps = res.maps;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!maps[i].compose(maps[i + 1]).is_zero())
      return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    auto ker = kernel_of_map(maps[i]);
    if (i + 1 < maps.size()) {
      if (!same_span(ker, maps[i + 1].columns()))
        return false;
    } else if (!ker.empty()) {
      return false;
    }
  }
  return true;
}

bool has_no_unit_entries(const FreeResolution &res) {
  for (const auto &m : res.maps)
    if (first_unit(m))
      return false;
  return true;
}

} // namespace gspline
