#pragma once

// Exact multivariate polynomials over Q or F_p, monomial/module term orders,
// and elements of graded free modules.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gspline {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class RingMismatch : public Error {
public:
  RingMismatch() : Error("operands live in different rings") {}
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// The base ring k[x_1..x_n]. characteristic == 0 means k = Q, otherwise
// k = F_p for the stored prime p < 2^31.
class RingSpec {
public:
  static std::shared_ptr<const RingSpec>
  make(std::vector<std::string> variables, std::uint32_t characteristic = 0);

  const std::vector<std::string> &variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string field_name() const;

  bool operator==(const RingSpec &other) const noexcept {
    return p_ == other.p_ && vars_ == other.vars_;
  }

  // Field arithmetic on scalars. Scalars of F_p are integers in [0, p).
  void normalize(mpq_class &c) const;
  mpq_class inverse(const mpq_class &c) const;

private:
  RingSpec(std::vector<std::string> v, std::uint32_t p)
      : vars_(std::move(v)), p_(p) {}
  std::vector<std::string> vars_;
  std::uint32_t p_;
};

using Ring = std::shared_ptr<const RingSpec>;

bool same_ring(const Ring &a, const Ring &b) noexcept;
bool is_prime(std::uint64_t n);

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t> &exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial &other) const noexcept;
  Monomial operator*(const Monomial &other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial &divisor) const;
  Monomial lcm(const Monomial &other) const;
  bool coprime(const Monomial &other) const noexcept;

  bool operator==(const Monomial &other) const noexcept {
    return exps_ == other.exps_;
  }

private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

enum class TermOrder { grevlex, lex };
enum class ModuleStrategy { position_over_term, term_over_position };

// Order on module terms m*e_c. Component 0 is the largest basis vector.
// When elimination_block > 0, every term with component < elimination_block
// is larger than every term outside the block; the strategy applies inside
// each block.
struct MonomialOrder {
  TermOrder kind = TermOrder::grevlex;
  ModuleStrategy strategy = ModuleStrategy::term_over_position;
  std::size_t components = 1;
  std::size_t elimination_block = 0;

  std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
  std::strong_ordering compare(const Monomial &a, std::size_t ca,
                               const Monomial &b, std::size_t cb) const;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {TermOrder::lex}; }
};

// Throws InvalidArgument on length mismatch.
std::strong_ordering monomial_compare(const MonomialOrder &order,
                                      const Monomial &a, const Monomial &b);

struct Term {
  Monomial monomial;
  mpq_class coeff;
};

// Canonical form: terms sorted strictly descending in grevlex, no zero
// coefficients.
class Polynomial {
public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial zero(const Ring &ring) { return Polynomial(ring); }
  static Polynomial constant(const Ring &ring, const mpq_class &c);
  static Polynomial variable(const Ring &ring, std::size_t index);
  static Polynomial monomial(const Ring &ring, const Monomial &m,
                             const mpq_class &c);

  const Ring &ring() const noexcept { return ring_; }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term (0 if absent).
  mpq_class constant_term() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Max total degree; -1 for the zero polynomial.
  long total_degree() const noexcept;
  // Degree when homogeneous; nullopt when not homogeneous or zero.
  std::optional<long> homogeneous_degree() const noexcept;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator*(const Polynomial &o) const;
  Polynomial scaled(const mpq_class &c) const;
  Polynomial times_monomial(const Monomial &m, const mpq_class &c) const;
  Polynomial pow(unsigned e) const;
  Polynomial &operator+=(const Polynomial &o) { return *this = *this + o; }
  Polynomial &operator-=(const Polynomial &o) { return *this = *this - o; }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  bool operator==(const Polynomial &o) const;

  std::string to_string() const;

private:
  Ring ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul, scale };

// Exact ring arithmetic. For PolyOp::scale, g must be a constant.
Polynomial poly_op(PolyOp kind, const Polynomial &f, const Polynomial &g);

struct Homogeneity {
  bool homogeneous;
  std::optional<long> degree; // unset for the zero polynomial
};
Homogeneity is_homogeneous(const Polynomial &f);

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := integer | integer '/' integer | variable | '(' expr ')'
Polynomial parse_polynomial(std::string_view text, const Ring &ring);

// Exact quotient f / g. Throws Error when g does not divide f.
Polynomial exact_divide(const Polynomial &f, const Polynomial &g);

// Element of a graded free module R^k. shifts[i] is the degree of the i-th
// basis vector, so a component of degree d sits in degree d + shifts[i].
class VectorElement {
public:
  VectorElement(Ring ring, std::size_t rank);
  VectorElement(Ring ring, std::vector<int> shifts);
  explicit VectorElement(std::vector<Polynomial> components,
                         std::vector<int> shifts = {});

  static VectorElement basis(const Ring &ring, std::size_t rank,
                             std::size_t index, std::vector<int> shifts = {});

  const Ring &ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return comps_.size(); }
  const std::vector<Polynomial> &components() const noexcept { return comps_; }
  const Polynomial &operator[](std::size_t i) const { return comps_[i]; }
  void set(std::size_t i, Polynomial p);
  const std::vector<int> &shifts() const noexcept { return shifts_; }
  void set_shifts(std::vector<int> shifts);

  bool is_zero() const noexcept;
  // Degree when every nonzero component c_i is homogeneous with
  // deg(c_i) + shifts[i] constant; nullopt otherwise or when zero.
  std::optional<long> homogeneous_degree() const noexcept;

  VectorElement operator+(const VectorElement &o) const;
  VectorElement operator-(const VectorElement &o) const;
  VectorElement operator-() const;
  VectorElement operator*(const Polynomial &f) const;
  // Componentwise (Hadamard) product; the ring structure on R^V.
  VectorElement hadamard(const VectorElement &o) const;

  bool operator==(const VectorElement &o) const;

  std::string to_string() const;

private:
  Ring ring_;
  std::vector<Polynomial> comps_;
  std::vector<int> shifts_;
};

} // namespace gspline
