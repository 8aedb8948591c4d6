#pragma once

// Graded free resolutions, Betti tables, Hilbert series, projective
// dimension and depth of finitely generated graded modules over
// k[x_1..x_n].
//
// Depth is measured at the irrelevant ideal (x_1, ..., x_n). For finitely
// generated graded modules this agrees with depth after localizing at that
// maximal ideal, so the graded computation stands in for the local one.
// Two independent routes are offered: Auslander-Buchsbaum (n - pd) and a
// greedy regular sequence of generic linear forms.

#include "gspline/groebner.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gspline {

class ZeroModule : public Error {
public:
  ZeroModule() : Error("the module is zero") {}
};

class NotGraded : public Error {
public:
  NotGraded() : Error("the presentation is not homogeneous") {}
};

class OracleDisagreement : public Error {
public:
  using Error::Error;
};

enum class PresentationMode { submodule, cokernel };

// Either span(elements) inside R^k, or R^k / span(elements).
class ModulePresentation {
public:
  static ModulePresentation submodule(Ring ring, std::vector<int> ambient_shifts,
                                      std::vector<VectorElement> generators);
  static ModulePresentation cokernel(Ring ring, std::vector<int> ambient_shifts,
                                     std::vector<VectorElement> relations);
  static ModulePresentation free_module(Ring ring, std::vector<int> shifts) {
    return cokernel(std::move(ring), std::move(shifts), {});
  }

  const Ring &ring() const noexcept { return ring_; }
  std::size_t ambient_rank() const noexcept { return shifts_.size(); }
  const std::vector<int> &ambient_shifts() const noexcept { return shifts_; }
  PresentationMode mode() const noexcept { return mode_; }
  const std::vector<VectorElement> &elements() const noexcept {
    return elements_;
  }
  bool graded() const noexcept { return graded_; }
  // Matrix whose columns are the generators (submodule) or relations
  // (cokernel).
  ModuleMap element_map() const;

private:
  ModulePresentation(Ring ring, std::vector<int> shifts, PresentationMode mode,
                     std::vector<VectorElement> elements);
  Ring ring_;
  std::vector<int> shifts_;
  PresentationMode mode_;
  std::vector<VectorElement> elements_;
  bool graded_ = true;
};

// F_0 <- F_1 <- ... <- F_l. maps[i] : F_{i+1} -> F_i. degrees[i] lists the
// degrees of the basis of F_i (F_i = sum_j R(-degrees[i][j])).
struct FreeResolution {
  std::vector<std::vector<int>> degrees;
  std::vector<ModuleMap> maps;
  bool minimal = false;

  std::size_t length() const noexcept {
    return degrees.empty() ? 0 : degrees.size() - 1;
  }
};

class BettiTable {
public:
  int at(int i, int j) const;
  const std::map<std::pair<int, int>, int> &entries() const noexcept {
    return entries_;
  }
  void add(int i, int j, int count = 1);
  int projective_dimension() const;
  // Rows indexed by j - i, columns by i, in the usual layout.
  std::string to_string() const;
  bool operator==(const BettiTable &) const = default;

private:
  std::map<std::pair<int, int>, int> entries_;
};

// numerator(t) / (1 - t)^denominator_exponent.
struct HilbertSeries {
  std::map<int, long long> numerator; // exponent -> nonzero coefficient
  int denominator_exponent = 0;

  long long numerator_at_one() const;
  HilbertSeries operator+(const HilbertSeries &o) const;
  bool operator==(const HilbertSeries &o) const;
  // Cancels common factors of (1 - t).
  HilbertSeries reduced() const;
  std::string numerator_string() const;
  std::string to_string() const;
};

struct DepthReport {
  int depth_ab = 0;
  int depth_regseq = 0;
  int pd = 0;
  bool agree = false;
};

FreeResolution free_resolution(const ModulePresentation &p,
                               std::size_t max_length);
BettiTable betti_table(const FreeResolution &res);
// The zero module has the zero series.
HilbertSeries hilbert_series(const ModulePresentation &p);
int projective_dimension(const ModulePresentation &p);
int depth_ab(const ModulePresentation &p);
// Greedy generic linear forms, 5 draws per level, capped at nvars.
int depth_regular_sequence(const ModulePresentation &p, std::uint64_t seed);
DepthReport depth_report(const ModulePresentation &p, std::uint64_t seed);
int module_rank(const ModulePresentation &p);
bool is_zero_module(const ModulePresentation &p);

// Everything the spline reports need from one module, computed from a
// single minimal resolution.
struct ModuleInvariants {
  bool zero = false;
  FreeResolution resolution;
  BettiTable betti;
  HilbertSeries hilbert;
  int pd = 0;
  int depth_ab = 0;
  std::optional<int> depth_regseq; // set when a seed was supplied
  int rank = 0;
};
// Requires a graded presentation.
ModuleInvariants module_invariants(const ModulePresentation &p,
                                   std::optional<std::uint64_t> regseq_seed);

// Rank over the fraction field via fraction-free Gaussian elimination.
std::size_t fraction_field_rank(const ModuleMap &m);

// Image equals kernel at every interior step, checked by mutual membership,
// and consecutive maps compose to zero.
bool is_exact(const FreeResolution &res);
// No entry of any map has a nonzero constant term.
bool has_no_unit_entries(const FreeResolution &res);

} // namespace gspline
