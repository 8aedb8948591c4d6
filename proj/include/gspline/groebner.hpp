#pragma once

// Buchberger's algorithm for submodules of graded free modules R^k, with
// normal forms, membership (with coordinates), kernels and syzygies.

#include "gspline/polyring.hpp"

#include <memory>
#include <vector>

namespace gspline {

namespace detail {
struct BasisData;
}

// A map R^cols -> R^rows given by a matrix of polynomials. Column j is the
// image of the j-th source basis vector. When graded, entry (i, j) must be
// homogeneous of degree source_shifts[j] - target_shifts[i] (or zero).
class ModuleMap {
public:
  ModuleMap(Ring ring, std::size_t rows, std::size_t cols);
  ModuleMap(Ring ring, std::size_t rows, std::vector<VectorElement> columns,
            std::vector<int> target_shifts = {},
            std::vector<int> source_shifts = {});

  const Ring &ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Polynomial &at(std::size_t i, std::size_t j) const {
    return entries_.at(i * cols_ + j);
  }
  void set(std::size_t i, std::size_t j, Polynomial p);

  const std::vector<int> &source_shifts() const noexcept { return src_; }
  const std::vector<int> &target_shifts() const noexcept { return tgt_; }
  void set_shifts(std::vector<int> target, std::vector<int> source);

  // True when every entry is homogeneous of the degree the shifts demand.
  bool is_graded() const;
  bool is_zero() const;

  VectorElement column(std::size_t j) const;
  std::vector<VectorElement> columns() const;
  VectorElement apply(const VectorElement &v) const;
  // this * other
  ModuleMap compose(const ModuleMap &other) const;

private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
  std::vector<int> tgt_, src_;
};

class GroebnerBasis {
public:
  const Ring &ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<int> &shifts() const noexcept { return shifts_; }
  const MonomialOrder &order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  const std::vector<VectorElement> &generators() const noexcept {
    return gens_;
  }

private:
  friend GroebnerBasis buchberger(const Ring &, const std::vector<int> &,
                                  const std::vector<VectorElement> &,
                                  const MonomialOrder &);
  friend VectorElement normal_form(const VectorElement &,
                                   const GroebnerBasis &);
  Ring ring_;
  std::size_t rank_ = 0;
  std::vector<int> shifts_;
  MonomialOrder order_;
  bool reduced_ = true;
  std::vector<VectorElement> gens_;
  std::shared_ptr<const detail::BasisData> data_;
};

// Reduced Groebner basis of span(gens) inside R^k, k = shifts.size().
// Output generators are monic and sorted ascending by leading term.
GroebnerBasis buchberger(const Ring &ring, const std::vector<int> &shifts,
                         const std::vector<VectorElement> &gens,
                         const MonomialOrder &order);
// Convenience overload; gens must be nonempty and share one rank.
GroebnerBasis buchberger(const std::vector<VectorElement> &gens,
                         const MonomialOrder &order);

// Fully reduced remainder of v modulo the basis.
VectorElement normal_form(const VectorElement &v, const GroebnerBasis &basis);
bool in_span(const VectorElement &v, const GroebnerBasis &basis);

// Generating set of ker(map), canonically sorted. Minimal when the map is
// graded; otherwise a Groebner basis of the kernel.
std::vector<VectorElement> kernel_of_map(const ModuleMap &map);

// Columns generate the first syzygies of gens. Target shifts are the
// generator degrees when gens are homogeneous.
ModuleMap syzygy_module(const std::vector<VectorElement> &gens);

struct Membership {
  bool member = false;
  std::vector<Polynomial> coordinates;
};
Membership module_membership(const VectorElement &v,
                             const std::vector<VectorElement> &gens);

// Drops generators lying in the span of earlier ones, processing in degree
// order. Minimal for homogeneous input. Zero vectors are removed.
std::vector<VectorElement>
minimal_generators(const std::vector<VectorElement> &gens);

// Deterministic order for generator lists: degree, then leading term under
// grevlex/TOP, then text form.
void canonical_sort(std::vector<VectorElement> &gens);

// Mutual containment of spans. Both lists must share one ambient rank.
bool same_span(const std::vector<VectorElement> &a,
               const std::vector<VectorElement> &b);

} // namespace gspline
