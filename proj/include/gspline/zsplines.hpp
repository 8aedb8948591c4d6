#pragma once

// Generalized splines over the integers. Labels are nonzero integers m_e and
// the spline lattice is {r in Z^V : m_e | r_tail - r_head}.

#include "gspline/polyring.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gspline {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
IntMatrix transpose(const IntMatrix &a, std::size_t cols = 0);
// Square matrices only. Fraction-free elimination.
mpz_class determinant(const IntMatrix &a);

struct HermiteForm {
  IntMatrix H; // row-style: pivots positive, entries above a pivot in [0, p)
  IntMatrix U; // unimodular, H = U * M
  std::size_t rank = 0;
};
// cols is only needed when M has no rows.
HermiteForm hermite_normal_form(const IntMatrix &m, std::size_t cols = 0);

struct SmithForm {
  IntMatrix S; // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix U, V; // unimodular, S = U * M * V
};
SmithForm smith_normal_form(const IntMatrix &m, std::size_t cols = 0);

struct IntegerEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  mpz_class label; // stored positive
};

class IntegerGraph {
public:
  IntegerGraph(std::vector<std::string> vertices, std::vector<IntegerEdge> edges);
  const std::vector<std::string> &vertices() const noexcept {
    return vertices_;
  }
  const std::vector<IntegerEdge> &edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  // 1 when there are no edges.
  mpz_class label_lcm() const;
  bool satisfies_congruences(const std::vector<mpz_class> &r) const;

private:
  std::vector<std::string> vertices_;
  std::vector<IntegerEdge> edges_;
};

struct IntegerSplineBasis {
  IntMatrix basis; // |V| rows of length |V|
  mpz_class index; // [Z^V : spline lattice] = |det(basis)|
};

IntegerSplineBasis integer_splines(const IntegerGraph &g);

// Integer coordinates of v with respect to the rows of basis, if any.
std::optional<std::vector<mpz_class>>
lattice_coordinates(const IntMatrix &basis, const std::vector<mpz_class> &v);

// Every vector with entries in [0, bound) satisfying the congruences is an
// integer combination of the basis rows.
bool lattice_saturation_check(const IntegerSplineBasis &b, const IntegerGraph &g,
                              const mpz_class &bound);

struct ResidueCount {
  mpz_class modulus;     // lcm of the labels
  mpz_class solutions;   // vectors mod lcm satisfying the congruences
  mpz_class index;       // modulus^|V| / solutions
};
// Exhaustive count over (Z/lcm)^V.
ResidueCount count_residue_solutions(const IntegerGraph &g);

} // namespace gspline
