#pragma once

// Generalized splines on edge-labeled graphs: the potential map, the spline
// module R_G and the four modules around it in the two exact sequences
//
//   0 -> R_G -> R^V -> cosplines -> 0
//   0 -> cosplines -> R^E -> failed cosplines -> 0
//
// together with depth and freeness checks built on the homology layer.

#include "gspline/homology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gspline {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::vector<Polynomial> label; // generators of I_e
};

enum class LabelKind {
  zero,      // I_e = 0, condition r_tail = r_head
  unit,      // I_e = R, no condition
  principal, // one nonzero non-unit generator
  general
};

class EdgeLabeledGraph {
public:
  EdgeLabeledGraph(Ring ring, std::vector<std::string> vertices,
                   std::vector<Edge> edges);

  const Ring &ring() const noexcept { return ring_; }
  const std::vector<std::string> &vertices() const noexcept {
    return vertices_;
  }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t vertex_index(const std::string &name) const;

  // Nonzero generators of I_e.
  std::vector<Polynomial> label_generators(std::size_t e) const;
  LabelKind label_kind(std::size_t e) const;
  // Edges whose label is not the unit ideal; these index the rows of the
  // potential map and the summands of R^E.
  std::vector<std::size_t> effective_edges() const;
  // Every label generator is homogeneous.
  bool graded() const;
  // Every label is a nonzero principal proper ideal.
  bool principal_labels() const;

private:
  Ring ring_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// Swaps tail and head of one edge.
EdgeLabeledGraph orientation_flip(const EdgeLabeledGraph &g,
                                  std::size_t edge_index);

// Rows: effective edges. Columns: vertices, then one column per label
// generator in edge order.
ModuleMap build_potential_map(const EdgeLabeledGraph &g);

// True when r_tail - r_head lies in I_e for every edge.
bool satisfies_edge_conditions(const EdgeLabeledGraph &g,
                               const VectorElement &r);

struct SplinePresentation {
  std::vector<VectorElement> generators; // in R^|V|, shifts 0
  bool graded = false;
  std::vector<int> generator_degrees; // when graded
};

SplinePresentation compute_splines(const EdgeLabeledGraph &g);

// R_G as a submodule of R^V.
ModulePresentation spline_module(const EdgeLabeledGraph &g,
                                 const SplinePresentation &s);
// R^V
ModulePresentation potential_splines(const EdgeLabeledGraph &g);
// R^V / R_G
ModulePresentation compute_cosplines(const EdgeLabeledGraph &g,
                                     const SplinePresentation &s);
ModulePresentation compute_cosplines(const EdgeLabeledGraph &g);
// direct sum of R / I_e over the effective edges
ModulePresentation potential_cosplines(const EdgeLabeledGraph &g);
// R^E / image of the difference map
ModulePresentation compute_failed_cosplines(const EdgeLabeledGraph &g);

// The five modules of one instance with their invariants. Invariants are
// only present for graded instances.
struct SplineModules {
  SplinePresentation splines;
  std::vector<ModulePresentation> modules; // indexed by ModuleId
  std::vector<ModuleInvariants> invariants;
};

enum ModuleId : std::size_t {
  splines_id = 0,
  potential_splines_id,
  cosplines_id,
  potential_cosplines_id,
  failed_cosplines_id,
  module_count
};
const char *module_name(std::size_t id);

// With a seed the regular-sequence depth is also computed for every
// nonzero module.
SplineModules compute_modules(const EdgeLabeledGraph &g,
                              std::optional<std::uint64_t> regseq_seed,
                              bool with_cosplines = true);

struct ExactSequenceReport {
  bool hilbert_applicable = false;
  bool potential_hilbert_ok = false;
  bool copotential_hilbert_ok = false;
  bool potential_rank_ok = false;
  bool copotential_rank_ok = false;
  // HS(R^V), HS(R_G) + HS(cosplines), HS(R^E), HS(cosplines) + HS(failed)
  std::vector<HilbertSeries> series;
  std::vector<int> ranks; // indexed by ModuleId

  bool potential_ok() const {
    return potential_rank_ok && (!hilbert_applicable || potential_hilbert_ok);
  }
  bool copotential_ok() const {
    return copotential_rank_ok &&
           (!hilbert_applicable || copotential_hilbert_ok);
  }
};

ExactSequenceReport verify_fundamental_sequences(const EdgeLabeledGraph &g,
                                                 const SplineModules &m);
ExactSequenceReport verify_fundamental_sequences(const EdgeLabeledGraph &g);

enum class FreenessStatus { free, not_free, unsupported };

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::unsupported;
  int pd = 0;
  int rank = 0;
  bool free = false;
  std::vector<VectorElement> basis; // when free
  std::vector<int> basis_degrees;
  std::vector<VectorElement> generators; // kernel generators, always
  std::optional<BettiTable> betti;
  std::optional<HilbertSeries> hilbert;
  std::string status_text() const;
};

FreenessVerdict freeness_verdict(const EdgeLabeledGraph &g,
                                 const SplineModules &m);
FreenessVerdict freeness_verdict(const EdgeLabeledGraph &g);

enum class CheckStatus { pass, fail, not_applicable };
const char *check_status_name(CheckStatus s);

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
};

struct ModuleDepth {
  bool zero = false;
  int depth_ab = 0;
  std::optional<int> depth_regseq;
  int pd = 0;
};

struct DepthEstimateReport {
  std::vector<ModuleDepth> depths; // indexed by ModuleId
  std::vector<NamedCheck> checks;
  bool all_passed() const;
};

// Needs invariants computed with a regular-sequence seed.
DepthEstimateReport depth_estimate_report(const EdgeLabeledGraph &g,
                                          const SplineModules &m);
DepthEstimateReport depth_estimate_report(const EdgeLabeledGraph &g,
                                          std::uint64_t seed);

// Checks that hold for every instance: soundness of the generators, the
// constant spline, closure under componentwise products of random span
// elements, invariance under flipping one edge, and (graded) a minimal
// exact resolution of length at most nvars.
std::vector<NamedCheck> structural_checks(const EdgeLabeledGraph &g,
                                          const SplineModules &m,
                                          std::uint64_t seed,
                                          int closure_pairs = 5);

// The full battery for one instance: exact sequences, depth estimates,
// freeness under the principal hypothesis and the structural checks.
struct Verification {
  SplineModules modules;
  ExactSequenceReport sequences;
  FreenessVerdict freeness;
  DepthEstimateReport depth;
  std::vector<NamedCheck> checks;

  bool passed() const;
  std::vector<const NamedCheck *> failures() const;
};

Verification verify_instance(const EdgeLabeledGraph &g, std::uint64_t seed);

} // namespace gspline
