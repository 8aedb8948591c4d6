#include "gspline/splines.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace gspline {

// ----------------------------------------------------------------- graph

EdgeLabeledGraph::EdgeLabeledGraph(Ring ring, std::vector<std::string> vertices,
                                   std::vector<Edge> edges)
    : ring_(std::move(ring)), vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  if (vertices_.empty())
    throw InvalidArgument("a graph needs at least one vertex");
  std::set<std::string> seen;
  for (const auto &v : vertices_) {
    if (v.empty())
      throw InvalidArgument("empty vertex name");
    if (!seen.insert(v).second)
      throw InvalidArgument("duplicate vertex name '" + v + "'");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto &edge = edges_[e];
    std::string where = "edge " + std::to_string(e) + ": ";
    if (edge.tail >= vertices_.size() || edge.head >= vertices_.size())
      throw InvalidArgument(where + "endpoint out of range");
    if (edge.tail == edge.head)
      throw InvalidArgument(where + "self-loop");
    if (edge.label.empty())
      throw InvalidArgument(where + "empty label");
    for (const auto &f : edge.label)
      if (!same_ring(f.ring(), ring_))
        throw RingMismatch();
  }
}

std::size_t EdgeLabeledGraph::vertex_index(const std::string &name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end())
    throw InvalidArgument("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Polynomial>
EdgeLabeledGraph::label_generators(std::size_t e) const {
  std::vector<Polynomial> out;
  for (const auto &f : edges_.at(e).label)
    if (!f.is_zero())
      out.push_back(f);
  return out;
}

LabelKind EdgeLabeledGraph::label_kind(std::size_t e) const {
  auto gens = label_generators(e);
  if (gens.empty())
    return LabelKind::zero;
  for (const auto &f : gens)
    if (f.is_constant())
      return LabelKind::unit;
  if (gens.size() == 1)
    return LabelKind::principal;
  bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const auto &f) {
    return is_homogeneous(f).homogeneous;
  });
  if (homogeneous) {
    std::vector<VectorElement> v;
    for (const auto &f : gens)
      v.emplace_back(std::vector<Polynomial>{f});
    if (minimal_generators(v).size() == 1)
      return LabelKind::principal;
  }
  return LabelKind::general;
}

std::vector<std::size_t> EdgeLabeledGraph::effective_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (label_kind(e) != LabelKind::unit)
      out.push_back(e);
  return out;
}

bool EdgeLabeledGraph::graded() const {
  for (const auto &edge : edges_)
    for (const auto &f : edge.label)
      if (!is_homogeneous(f).homogeneous)
        return false;
  return true;
}

bool EdgeLabeledGraph::principal_labels() const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (label_kind(e) != LabelKind::principal)
      return false;
  return true;
}

EdgeLabeledGraph orientation_flip(const EdgeLabeledGraph &g,
                                  std::size_t edge_index) {
  if (edge_index >= g.edge_count())
    throw InvalidArgument("edge index out of range");
  auto edges = g.edges();
  std::swap(edges[edge_index].tail, edges[edge_index].head);
  return EdgeLabeledGraph(g.ring(), g.vertices(), std::move(edges));
}

// --------------------------------------------------------- potential map

namespace {

int degree_of(const Polynomial &f) {
  auto h = is_homogeneous(f);
  return h.degree ? static_cast<int>(*h.degree)
                  : static_cast<int>(f.total_degree());
}

VectorElement scalar_vector(const Polynomial &f) {
  return VectorElement(std::vector<Polynomial>{f});
}

} // namespace

ModuleMap build_potential_map(const EdgeLabeledGraph &g) {
  const Ring &ring = g.ring();
  auto rows = g.effective_edges();
  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<Polynomial>> labels;
  std::size_t cols = nv;
  for (auto e : rows) {
    labels.push_back(g.label_generators(e));
    cols += labels.back().size();
  }
  ModuleMap m(ring, rows.size(), cols);
  std::vector<int> src(nv, 0);
  std::size_t col = nv;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &edge = g.edges()[rows[i]];
    m.set(i, edge.tail, Polynomial::constant(ring, 1));
    m.set(i, edge.head, Polynomial::constant(ring, -1));
    for (const auto &f : labels[i]) {
      m.set(i, col++, f);
      src.push_back(degree_of(f));
    }
  }
  m.set_shifts(std::vector<int>(rows.size(), 0), std::move(src));
  return m;
}

bool satisfies_edge_conditions(const EdgeLabeledGraph &g,
                               const VectorElement &r) {
  if (r.rank() != g.vertex_count())
    throw InvalidArgument("vector length does not match the vertex count");
  for (auto e : g.effective_edges()) {
    const auto &edge = g.edges()[e];
    Polynomial diff = r[edge.tail] - r[edge.head];
    if (diff.is_zero())
      continue;
    auto gens = g.label_generators(e);
    if (gens.empty())
      return false;
    std::vector<VectorElement> ideal;
    for (const auto &f : gens)
      ideal.push_back(scalar_vector(f));
    auto gb = buchberger(g.ring(), {0}, ideal, MonomialOrder::grevlex());
    if (!in_span(scalar_vector(diff), gb))
      return false;
  }
  return true;
}

// --------------------------------------------------------------- splines

SplinePresentation compute_splines(const EdgeLabeledGraph &g) {
  const Ring &ring = g.ring();
  const std::size_t nv = g.vertex_count();
  const std::vector<int> zero_shifts(nv, 0);
  SplinePresentation s;
  s.graded = g.graded();
  ModuleMap m = build_potential_map(g);
  std::vector<VectorElement> projected;
  if (m.rows() == 0) {
    for (std::size_t i = 0; i < nv; ++i)
      projected.push_back(VectorElement::basis(ring, nv, i, zero_shifts));
  } else {
    for (const auto &k : kernel_of_map(m)) {
      VectorElement v(ring, zero_shifts);
      for (std::size_t i = 0; i < nv; ++i)
        v.set(i, k[i]);
      if (!v.is_zero())
        projected.push_back(std::move(v));
    }
  }
  if (s.graded) {
    s.generators = minimal_generators(projected);
  } else {
    s.generators =
        buchberger(ring, zero_shifts, projected, MonomialOrder::grevlex())
            .generators();
  }
  canonical_sort(s.generators);
  for (const auto &v : s.generators) {
    if (!satisfies_edge_conditions(g, v))
      throw Error("internal: spline generator violates an edge condition: " +
                  v.to_string());
    if (s.graded)
      s.generator_degrees.push_back(static_cast<int>(*v.homogeneous_degree()));
  }
  return s;
}

ModulePresentation spline_module(const EdgeLabeledGraph &g,
                                 const SplinePresentation &s) {
  return ModulePresentation::submodule(
      g.ring(), std::vector<int>(g.vertex_count(), 0), s.generators);
}

ModulePresentation potential_splines(const EdgeLabeledGraph &g) {
  return ModulePresentation::free_module(g.ring(),
                                         std::vector<int>(g.vertex_count(), 0));
}

ModulePresentation compute_cosplines(const EdgeLabeledGraph &g,
                                     const SplinePresentation &s) {
  return ModulePresentation::cokernel(
      g.ring(), std::vector<int>(g.vertex_count(), 0), s.generators);
}

ModulePresentation compute_cosplines(const EdgeLabeledGraph &g) {
  return compute_cosplines(g, compute_splines(g));
}

namespace {

std::vector<VectorElement> label_relations(const EdgeLabeledGraph &g,
                                           const std::vector<std::size_t> &rows) {
  std::vector<VectorElement> rels;
  const std::vector<int> shifts(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto &f : g.label_generators(rows[i])) {
      VectorElement v(g.ring(), shifts);
      v.set(i, f);
      rels.push_back(std::move(v));
    }
  return rels;
}

} // namespace

ModulePresentation potential_cosplines(const EdgeLabeledGraph &g) {
  auto rows = g.effective_edges();
  return ModulePresentation::cokernel(
      g.ring(), std::vector<int>(rows.size(), 0), label_relations(g, rows));
}

ModulePresentation compute_failed_cosplines(const EdgeLabeledGraph &g) {
  auto rows = g.effective_edges();
  auto rels = label_relations(g, rows);
  ModuleMap m = build_potential_map(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto col = m.column(v);
    if (!col.is_zero())
      rels.push_back(col);
  }
  return ModulePresentation::cokernel(
      g.ring(), std::vector<int>(rows.size(), 0), std::move(rels));
}

const char *module_name(std::size_t id) {
  switch (id) {
  case splines_id:
    return "splines";
  case potential_splines_id:
    return "potential_splines";
  case cosplines_id:
    return "cosplines";
  case potential_cosplines_id:
    return "potential_cosplines";
  case failed_cosplines_id:
    return "failed_cosplines";
  default:
    return "?";
  }
}

SplineModules compute_modules(const EdgeLabeledGraph &g,
                              std::optional<std::uint64_t> regseq_seed,
                              bool with_cosplines) {
  SplineModules m;
  m.splines = compute_splines(g);
  m.modules.push_back(spline_module(g, m.splines));
  m.modules.push_back(potential_splines(g));
  if (with_cosplines) {
    m.modules.push_back(compute_cosplines(g, m.splines));
    m.modules.push_back(potential_cosplines(g));
    m.modules.push_back(compute_failed_cosplines(g));
  }
  if (m.splines.graded)
    for (std::size_t i = 0; i < m.modules.size(); ++i) {
      std::optional<std::uint64_t> seed;
      if (regseq_seed)
        seed = *regseq_seed + i;
      m.invariants.push_back(module_invariants(m.modules[i], seed));
    }
  return m;
}

// ------------------------------------------------------ exact sequences

namespace {

int rank_of(const SplineModules &m, std::size_t id) {
  if (!m.invariants.empty())
    return m.invariants[id].rank;
  const auto &p = m.modules[id];
  if (p.ambient_rank() == 0)
    return 0;
  return module_rank(p);
}

void require_cosplines(const SplineModules &m) {
  if (m.modules.size() < module_count)
    throw InvalidArgument("cospline modules were not computed");
}

} // namespace

ExactSequenceReport verify_fundamental_sequences(const EdgeLabeledGraph &g,
                                                 const SplineModules &m) {
  require_cosplines(m);
  ExactSequenceReport r;
  for (std::size_t i = 0; i < module_count; ++i)
    r.ranks.push_back(rank_of(m, i));
  r.potential_rank_ok = r.ranks[potential_splines_id] ==
                        r.ranks[splines_id] + r.ranks[cosplines_id];
  r.copotential_rank_ok = r.ranks[potential_cosplines_id] ==
                          r.ranks[cosplines_id] + r.ranks[failed_cosplines_id];
  r.hilbert_applicable = g.graded();
  if (r.hilbert_applicable) {
    const auto &inv = m.invariants;
    r.series = {inv[potential_splines_id].hilbert,
                inv[splines_id].hilbert + inv[cosplines_id].hilbert,
                inv[potential_cosplines_id].hilbert,
                inv[cosplines_id].hilbert + inv[failed_cosplines_id].hilbert};
    r.potential_hilbert_ok = r.series[0] == r.series[1];
    r.copotential_hilbert_ok = r.series[2] == r.series[3];
  }
  return r;
}

ExactSequenceReport verify_fundamental_sequences(const EdgeLabeledGraph &g) {
  return verify_fundamental_sequences(g, compute_modules(g, std::nullopt));
}

// -------------------------------------------------------------- freeness

std::string FreenessVerdict::status_text() const {
  switch (status) {
  case FreenessStatus::free:
    return "free";
  case FreenessStatus::not_free:
    return "not free";
  default:
    return "unsupported (non-graded)";
  }
}

FreenessVerdict freeness_verdict(const EdgeLabeledGraph &,
                                 const SplineModules &m) {
  FreenessVerdict v;
  v.generators = m.splines.generators;
  if (!m.splines.graded) {
    v.status = FreenessStatus::unsupported;
    v.rank = module_rank(m.modules[splines_id]);
    return v;
  }
  const auto &inv = m.invariants[splines_id];
  v.pd = inv.pd;
  v.rank = inv.rank;
  v.free = inv.pd == 0;
  v.status = v.free ? FreenessStatus::free : FreenessStatus::not_free;
  v.betti = inv.betti;
  v.hilbert = inv.hilbert;
  if (v.free) {
    v.basis = m.splines.generators;
    v.basis_degrees = m.splines.generator_degrees;
    if (v.basis.size() != static_cast<std::size_t>(v.rank))
      throw Error("internal: free spline module with a basis of the wrong size");
  }
  return v;
}

FreenessVerdict freeness_verdict(const EdgeLabeledGraph &g) {
  return freeness_verdict(g, compute_modules(g, std::nullopt, false));
}

// ----------------------------------------------------------------- depth

const char *check_status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  default:
    return "not-applicable";
  }
}

bool DepthEstimateReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const NamedCheck &c) {
    return c.status == CheckStatus::fail;
  });
}

namespace {

NamedCheck verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
          std::move(detail)};
}

NamedCheck skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::not_applicable, std::move(why)};
}

std::string depth_label(std::size_t id) {
  return std::string("depth(") + module_name(id) + ")";
}

// Presentation of a nonzero graded module as a cokernel, read off its
// minimal resolution.
struct Cokernel {
  std::vector<int> shifts;
  std::vector<VectorElement> relations;
};

Cokernel as_cokernel(const ModuleInvariants &inv) {
  Cokernel c;
  c.shifts = inv.resolution.degrees[0];
  if (!inv.resolution.maps.empty())
    c.relations = inv.resolution.maps[0].columns();
  return c;
}

int direct_sum_depth(const Ring &ring, const ModuleInvariants &a,
                     const ModuleInvariants &b) {
  auto ca = as_cokernel(a), cb = as_cokernel(b);
  std::vector<int> shifts = ca.shifts;
  shifts.insert(shifts.end(), cb.shifts.begin(), cb.shifts.end());
  std::vector<VectorElement> rels;
  for (const auto &r : ca.relations) {
    VectorElement v(ring, shifts);
    for (std::size_t i = 0; i < r.rank(); ++i)
      v.set(i, r[i]);
    rels.push_back(std::move(v));
  }
  for (const auto &r : cb.relations) {
    VectorElement v(ring, shifts);
    for (std::size_t i = 0; i < r.rank(); ++i)
      v.set(ca.shifts.size() + i, r[i]);
    rels.push_back(std::move(v));
  }
  auto inv = module_invariants(
      ModulePresentation::cokernel(ring, shifts, std::move(rels)), std::nullopt);
  return inv.depth_ab;
}

// Checks for 0 -> A -> B -> C -> 0.
void sequence_checks(const std::string &prefix, const Ring &ring,
                     const SplineModules &m, std::size_t a, std::size_t b,
                     std::size_t c, std::vector<NamedCheck> &out) {
  const auto &inv = m.invariants;
  auto zero_of = [&](std::initializer_list<std::size_t> ids) {
    std::string names;
    for (auto id : ids)
      if (inv[id].zero)
        names += (names.empty() ? "" : ", ") + std::string(module_name(id));
    return names;
  };
  auto d = [&](std::size_t id) { return inv[id].depth_ab; };
  auto inequality = [&](std::size_t lhs, std::size_t x, int dx, std::size_t y,
                        int dy) {
    std::string name = prefix + "." + depth_label(lhs) + ">=min(" +
                       depth_label(x) + (dx ? std::to_string(dx) : "") + "," +
                       depth_label(y) + (dy > 0 ? "+" : "") +
                       (dy ? std::to_string(dy) : "") + ")";
    auto z = zero_of({lhs, x, y});
    if (!z.empty())
      return skipped(name, "zero module: " + z);
    int rhs = std::min(d(x) + dx, d(y) + dy);
    return verdict(name, d(lhs) >= rhs,
                   std::to_string(d(lhs)) + " >= " + std::to_string(rhs));
  };
  out.push_back(inequality(a, b, 0, c, 1));
  out.push_back(inequality(b, a, 0, c, 0));
  out.push_back(inequality(c, b, 0, a, -1));

  // m is associated to M exactly when M is nonzero of depth 0.
  auto max_ass = [&](std::size_t id) { return !inv[id].zero && d(id) == 0; };
  std::string sa = module_name(a), sb = module_name(b), sc = module_name(c);
  out.push_back(verdict(prefix + ".ass(" + sa + ")<=ass(" + sb + ")",
                        !max_ass(a) || max_ass(b),
                        "depth-0 consequence of the containment"));
  out.push_back(verdict(prefix + ".ass(" + sb + ")<=ass(" + sa + ")+ass(" +
                            sc + ")",
                        !max_ass(b) || max_ass(a) || max_ass(c),
                        "depth-0 consequence of the containment"));
  std::string sum_name =
      prefix + ".ass(" + sa + "+" + sc + ")=ass(" + sa + ")+ass(" + sc + ")";
  if (inv[a].zero || inv[c].zero) {
    out.push_back(skipped(sum_name, "zero summand"));
  } else {
    int ds = direct_sum_depth(ring, inv[a], inv[c]);
    out.push_back(verdict(sum_name, (ds == 0) == (max_ass(a) || max_ass(c)),
                          "depth of the direct sum is " + std::to_string(ds)));
  }
}

} // namespace

DepthEstimateReport depth_estimate_report(const EdgeLabeledGraph &g,
                                          const SplineModules &m) {
  require_cosplines(m);
  DepthEstimateReport r;
  if (!g.graded()) {
    r.depths.resize(module_count);
    r.checks.push_back(skipped("depth", "unsupported (non-graded)"));
    return r;
  }
  const auto &inv = m.invariants;
  const int n = static_cast<int>(g.ring()->nvars());
  for (std::size_t i = 0; i < module_count; ++i) {
    ModuleDepth md;
    md.zero = inv[i].zero;
    md.depth_ab = inv[i].depth_ab;
    md.depth_regseq = inv[i].depth_regseq;
    md.pd = inv[i].pd;
    r.depths.push_back(md);
  }
  for (std::size_t i = 0; i < module_count; ++i) {
    std::string name = std::string("oracles.") + module_name(i);
    if (inv[i].zero)
      r.checks.push_back(skipped(name, "zero module"));
    else if (!inv[i].depth_regseq)
      r.checks.push_back(skipped(name, "regular-sequence depth not computed"));
    else
      r.checks.push_back(verdict(name, *inv[i].depth_regseq == inv[i].depth_ab,
                                 "auslander-buchsbaum " +
                                     std::to_string(inv[i].depth_ab) +
                                     ", regular sequence " +
                                     std::to_string(*inv[i].depth_regseq)));
  }

  sequence_checks("potential", g.ring(), m, splines_id, potential_splines_id,
                  cosplines_id, r.checks);
  if (inv[potential_cosplines_id].zero) {
    for (const char *c :
         {"copotential.depth_inequalities", "copotential.ass_containments"})
      r.checks.push_back(skipped(c, "no edges with a proper label"));
  } else {
    sequence_checks("copotential", g.ring(), m, cosplines_id,
                    potential_cosplines_id, failed_cosplines_id, r.checks);
  }

  const int d_rv = inv[potential_splines_id].depth_ab;
  r.checks.push_back(verdict("base.depth(potential_splines)=depth(R)",
                             d_rv == n,
                             std::to_string(d_rv) + " = " + std::to_string(n)));
  auto rows = g.effective_edges();
  std::string base_re = "base.depth(potential_cosplines)=min(depth(R/I_e))";
  if (rows.empty()) {
    r.checks.push_back(skipped(base_re, "no edges with a proper label"));
  } else {
    int best = n;
    for (auto e : rows) {
      std::vector<VectorElement> rel;
      for (const auto &f : g.label_generators(e))
        rel.push_back(scalar_vector(f));
      auto q = module_invariants(
          ModulePresentation::cokernel(g.ring(), {0}, std::move(rel)),
          std::nullopt);
      best = std::min(best, q.depth_ab);
    }
    int d_re = inv[potential_cosplines_id].depth_ab;
    r.checks.push_back(verdict(base_re, d_re == best,
                               std::to_string(d_re) + " = " +
                                   std::to_string(best)));
  }

  const bool principal = g.principal_labels();
  const std::string why_not = "labels are not all nonzero principal";
  std::string cm_rv = "principal.depth(potential_splines)=dim(R)";
  std::string cm_re = "principal.depth(potential_cosplines)=dim(R)-1";
  std::string cm_cos = "principal.depth(cosplines)>=1";
  std::string thm = "principal.depth(splines)>=2";
  if (!principal) {
    for (const auto &c : {cm_rv, cm_re, cm_cos, thm})
      r.checks.push_back(skipped(c, why_not));
    return r;
  }
  r.checks.push_back(verdict(cm_rv, d_rv == n, std::to_string(d_rv)));
  if (rows.empty()) {
    r.checks.push_back(skipped(cm_re, "no edges"));
    r.checks.push_back(skipped(cm_cos, "no edges"));
  } else {
    int d_re = inv[potential_cosplines_id].depth_ab;
    r.checks.push_back(verdict(cm_re, d_re == n - 1, std::to_string(d_re)));
    if (n < 2)
      r.checks.push_back(skipped(cm_cos, "dim(R) < 2"));
    else
      r.checks.push_back(verdict(cm_cos, inv[cosplines_id].depth_ab >= 1,
                                 std::to_string(inv[cosplines_id].depth_ab)));
  }
  if (n != 2)
    r.checks.push_back(skipped(thm, "dim(R) != 2"));
  else
    r.checks.push_back(verdict(thm, inv[splines_id].depth_ab >= 2,
                               std::to_string(inv[splines_id].depth_ab)));
  return r;
}

DepthEstimateReport depth_estimate_report(const EdgeLabeledGraph &g,
                                          std::uint64_t seed) {
  return depth_estimate_report(g, compute_modules(g, seed));
}

// ------------------------------------------------------------ structural

namespace {

std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t n) { return rng() % n; }

Polynomial random_coefficient(std::mt19937_64 &rng, const Ring &ring) {
  Polynomial f = Polynomial::constant(
      ring, mpq_class(static_cast<long>(draw(rng, 7)) - 3));
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    f = f + Polynomial::variable(ring, i)
                .scaled(mpq_class(static_cast<long>(draw(rng, 7)) - 3));
  return f;
}

VectorElement random_element(std::mt19937_64 &rng, const Ring &ring,
                             const std::vector<VectorElement> &gens,
                             std::size_t rank) {
  VectorElement v(ring, rank);
  for (const auto &g : gens) {
    VectorElement h(g.components());
    v = v + h * random_coefficient(rng, ring);
  }
  return v;
}

} // namespace

std::vector<NamedCheck> structural_checks(const EdgeLabeledGraph &g,
                                          const SplineModules &m,
                                          std::uint64_t seed,
                                          int closure_pairs) {
  std::vector<NamedCheck> out;
  const Ring &ring = g.ring();
  const std::size_t nv = g.vertex_count();
  const auto &gens = m.splines.generators;

  bool sound = std::all_of(gens.begin(), gens.end(), [&](const auto &v) {
    return satisfies_edge_conditions(g, v);
  });
  out.push_back(verdict("structure.edge_conditions", sound,
                        std::to_string(gens.size()) + " generators"));

  VectorElement ones(ring, nv);
  for (std::size_t i = 0; i < nv; ++i)
    ones.set(i, Polynomial::constant(ring, 1));
  std::vector<VectorElement> plain;
  for (const auto &v : gens)
    plain.emplace_back(v.components());
  auto gb = buchberger(ring, std::vector<int>(nv, 0), plain,
                       MonomialOrder::grevlex());
  out.push_back(verdict("structure.constant_spline", in_span(ones, gb),
                        "(1,...,1) in span"));

  std::mt19937_64 rng(seed);
  int closed = 0;
  for (int k = 0; k < closure_pairs; ++k) {
    auto a = random_element(rng, ring, gens, nv);
    auto b = random_element(rng, ring, gens, nv);
    if (in_span(a.hadamard(b), gb))
      ++closed;
  }
  out.push_back(verdict("structure.ring_closure", closed == closure_pairs,
                        std::to_string(closed) + "/" +
                            std::to_string(closure_pairs) + " products"));

  if (g.edge_count() == 0) {
    out.push_back(skipped("structure.orientation_flip", "no edges"));
  } else {
    std::size_t e = static_cast<std::size_t>(seed % g.edge_count());
    auto flipped = compute_splines(orientation_flip(g, e));
    out.push_back(verdict("structure.orientation_flip",
                          same_span(plain, flipped.generators),
                          "edge " + std::to_string(e)));
  }

  if (m.invariants.empty()) {
    for (const char *c : {"structure.resolution_composition",
                          "structure.resolution_minimal",
                          "structure.resolution_length"})
      out.push_back(skipped(c, "unsupported (non-graded)"));
    return out;
  }
  bool composes = true, minimal = true, bounded = true;
  std::size_t longest = 0;
  for (const auto &inv : m.invariants) {
    if (inv.zero)
      continue;
    const auto &maps = inv.resolution.maps;
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
      if (!maps[i].compose(maps[i + 1]).is_zero())
        composes = false;
    if (!has_no_unit_entries(inv.resolution))
      minimal = false;
    longest = std::max(longest, inv.resolution.length());
    if (inv.resolution.length() > ring->nvars())
      bounded = false;
  }
  out.push_back(verdict("structure.resolution_composition", composes,
                        "consecutive maps compose to zero"));
  out.push_back(verdict("structure.resolution_minimal", minimal,
                        "no constant entries"));
  out.push_back(verdict("structure.resolution_length", bounded,
                        "longest " + std::to_string(longest) +
                            " <= " + std::to_string(ring->nvars())));
  return out;
}

// ---------------------------------------------------------------- battery

bool Verification::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const NamedCheck &c) {
    return c.status == CheckStatus::fail;
  });
}

std::vector<const NamedCheck *> Verification::failures() const {
  std::vector<const NamedCheck *> out;
  for (const auto &c : checks)
    if (c.status == CheckStatus::fail)
      out.push_back(&c);
  return out;
}

Verification verify_instance(const EdgeLabeledGraph &g, std::uint64_t seed) {
  Verification v{compute_modules(g, seed), {}, {}, {}, {}};
  v.sequences = verify_fundamental_sequences(g, v.modules);
  v.freeness = freeness_verdict(g, v.modules);
  v.depth = depth_estimate_report(g, v.modules);

  const auto &es = v.sequences;
  auto rank_detail = [&](std::size_t a, std::size_t b, std::size_t c) {
    return std::to_string(es.ranks[a]) + " = " + std::to_string(es.ranks[b]) +
           " + " + std::to_string(es.ranks[c]);
  };
  v.checks.push_back(verdict("sequence.potential_rank", es.potential_rank_ok,
                             rank_detail(potential_splines_id, splines_id,
                                         cosplines_id)));
  v.checks.push_back(verdict("sequence.copotential_rank", es.copotential_rank_ok,
                             rank_detail(potential_cosplines_id, cosplines_id,
                                         failed_cosplines_id)));
  if (es.hilbert_applicable) {
    v.checks.push_back(verdict("sequence.potential_hilbert",
                               es.potential_hilbert_ok,
                               es.series[0].to_string() + " = " +
                                   es.series[1].to_string()));
    v.checks.push_back(verdict("sequence.copotential_hilbert",
                               es.copotential_hilbert_ok,
                               es.series[2].to_string() + " = " +
                                   es.series[3].to_string()));
  } else {
    v.checks.push_back(skipped("sequence.potential_hilbert", "unsupported (non-graded)"));
    v.checks.push_back(skipped("sequence.copotential_hilbert", "unsupported (non-graded)"));
  }
  v.checks.insert(v.checks.end(), v.depth.checks.begin(), v.depth.checks.end());

  std::string free_name = "principal.free_of_rank_|V|";
  const int nv = static_cast<int>(g.vertex_count());
  if (!g.graded())
    v.checks.push_back(skipped(free_name, "unsupported (non-graded)"));
  else if (!g.principal_labels())
    v.checks.push_back(skipped(free_name, "labels are not all nonzero principal"));
  else if (g.ring()->nvars() != 2)
    v.checks.push_back(skipped(free_name, "dim(R) != 2"));
  else
    v.checks.push_back(verdict(free_name, v.freeness.free && v.freeness.rank == nv,
                               "pd " + std::to_string(v.freeness.pd) + ", rank " +
                                   std::to_string(v.freeness.rank)));

  bool zero_label = false;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    zero_label = zero_label || g.label_kind(e) == LabelKind::zero;
  if (zero_label)
    v.checks.push_back(skipped("structure.rank_|V|", "zero label present"));
  else
    v.checks.push_back(verdict("structure.rank_|V|", es.ranks[splines_id] == nv,
                               std::to_string(es.ranks[splines_id])));

  auto s = structural_checks(g, v.modules, seed);
  v.checks.insert(v.checks.end(), s.begin(), s.end());
  return v;
}

} // namespace gspline
