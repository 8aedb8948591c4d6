#pragma once

// Internal sparse representation used by the Buchberger engine: a module
// element is a list of terms m*e_c sorted strictly descending in the active
// order.

#include "gspline/groebner.hpp"

#include <optional>
#include <set>

namespace gspline::detail {

struct MTerm {
  Monomial mono;
  std::uint32_t comp;
  mpq_class coeff;
};

using MPoly = std::vector<MTerm>;

class Engine {
public:
  Engine(Ring ring, MonomialOrder order, std::vector<int> shifts);

  const Ring &ring() const noexcept { return ring_; }
  const MonomialOrder &order() const noexcept { return order_; }
  const std::vector<int> &shifts() const noexcept { return shifts_; }
  std::size_t rank() const noexcept { return shifts_.size(); }

  std::strong_ordering cmp(const MTerm &a, const MTerm &b) const {
    return order_.compare(a.mono, a.comp, b.mono, b.comp);
  }

  MPoly from_vector(const VectorElement &v, std::size_t offset = 0) const;
  VectorElement to_vector(const MPoly &f, std::size_t offset,
                          const std::vector<int> &shifts) const;
  void sort(MPoly &f) const;

  // f - c * m * g
  MPoly sub_mul(const MPoly &f, const MPoly &g, const Monomial &m,
                const mpq_class &c) const;
  void make_monic(MPoly &f) const;
  // Degree of a term including the component shift.
  long degree(const MTerm &t) const {
    return static_cast<long>(t.mono.degree()) + shifts_[t.comp];
  }

  // Full reduction modulo the listed basis elements.
  MPoly reduce(MPoly f, const std::vector<MPoly> &basis) const;
  // Reduction skipping basis[skip].
  MPoly reduce_except(MPoly f, const std::vector<MPoly> &basis,
                      std::size_t skip) const;

private:
  std::optional<std::size_t> find_divisor(const MTerm &t,
                                          const std::vector<MPoly> &basis,
                                          std::size_t skip) const;
  Ring ring_;
  MonomialOrder order_;
  std::vector<int> shifts_;
};

// Incremental Buchberger completion with the normal selection strategy.
class Builder {
public:
  explicit Builder(const Engine &engine) : eng_(engine) {}

  // Reduces f against the current basis; appends it when nonzero.
  // Returns true when f was not already in the span of the current basis
  // (as far as the basis has been completed).
  bool add(MPoly f);
  // Processes pending pairs whose degree is at most max_degree.
  void complete(std::optional<long> max_degree = std::nullopt);

  const std::vector<MPoly> &basis() const noexcept { return basis_; }
  // Minimal, tail-reduced, monic basis sorted ascending by leading term.
  std::vector<MPoly> reduced_basis() const;

private:
  struct Pair {
    std::size_t i, j;
    long degree;
    MTerm lcm; // coefficient unused
  };
  void push(MPoly f);
  bool chain_criterion(const Pair &p) const;
  MPoly spoly(const Pair &p) const;

  const Engine &eng_;
  std::vector<MPoly> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

struct BasisData {
  Engine engine;
  std::vector<MPoly> basis;
};

} // namespace gspline::detail
