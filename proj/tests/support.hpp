#pragma once

// Shared helpers for the test suites: ring shortcuts, random generators and
// a degree-truncated linear-algebra oracle that is independent of the
// Groebner engine.

#include "gspline/groebner.hpp"
#include "gspline/polyring.hpp"
#include "gspline/splines.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gspline::testing {

inline Ring qxy() { return RingSpec::make({"x", "y"}); }

inline Polynomial P(const Ring &r, const std::string &s) {
  return parse_polynomial(s, r);
}

inline VectorElement V(const Ring &r, std::initializer_list<const char *> c,
                       std::vector<int> shifts = {}) {
  std::vector<Polynomial> comps;
  for (const char *s : c)
    comps.push_back(parse_polynomial(s, r));
  return VectorElement(std::move(comps), std::move(shifts));
}

// Uniform integer in [lo, hi] that does not depend on the standard library's
// distribution implementation.
inline long draw(std::mt19937_64 &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Monomial random_monomial(std::mt19937_64 &rng, std::size_t nvars,
                                unsigned max_exp) {
  std::vector<std::uint32_t> e(nvars);
  for (auto &x : e)
    x = static_cast<std::uint32_t>(draw(rng, 0, max_exp));
  return Monomial(std::move(e));
}

inline Polynomial random_poly(std::mt19937_64 &rng, const Ring &ring,
                              unsigned terms, unsigned max_exp) {
  std::vector<Term> t;
  for (unsigned i = 0; i < terms; ++i) {
    mpq_class c(draw(rng, -9, 9), draw(rng, 1, 4));
    c.canonicalize();
    t.push_back({random_monomial(rng, ring->nvars(), max_exp), c});
  }
  return Polynomial(ring, std::move(t));
}

// All exponent vectors in nvars variables of total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned left) {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

// Basis of the rational nullspace of a dense matrix (rows of equations).
inline std::vector<std::vector<mpq_class>>
rational_nullspace(std::vector<std::vector<mpq_class>> a, std::size_t ncols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0)
      ++piv;
    if (piv == a.size())
      continue;
    std::swap(a[piv], a[row]);
    mpq_class inv = 1 / a[row][col];
    for (auto &v : a[row])
      v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0)
        continue;
      mpq_class f = a[r][col];
      for (std::size_t k = 0; k < ncols; ++k)
        a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col)
    is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<mpq_class> v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solutions w of M*w = 0 with every component of polynomial degree <= d,
// found by coefficient linear algebra. Returns a basis of that Q-space.
inline std::vector<VectorElement> truncated_kernel(const ModuleMap &m,
                                                   unsigned d) {
  const Ring &ring = m.ring();
  auto monos = monomials_up_to(ring->nvars(), d);
  const std::size_t cols = m.cols(), nm = monos.size();
  const std::size_t unknowns = cols * nm;
  // Equations indexed by (row, monomial of the product).
  std::vector<std::vector<mpq_class>> eqs;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t>
      keys;
  auto eq_index = [&](std::size_t row, const Monomial &mono) {
    auto [it, fresh] = keys.try_emplace({row, mono.exponents()}, eqs.size());
    if (fresh)
      eqs.emplace_back(unknowns, mpq_class(0));
    return it->second;
  };
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto &t : m.at(i, j).terms())
        for (std::size_t u = 0; u < nm; ++u)
          eqs[eq_index(i, t.monomial * monos[u])][j * nm + u] += t.coeff;
  auto null = rational_nullspace(eqs, unknowns);
  std::vector<VectorElement> out;
  for (const auto &v : null) {
    VectorElement w(ring, m.source_shifts());
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Term> terms;
      for (std::size_t u = 0; u < nm; ++u)
        if (v[j * nm + u] != 0)
          terms.push_back({monos[u], v[j * nm + u]});
      w.set(j, Polynomial(ring, std::move(terms)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct EdgeSpec {
  const char *tail;
  const char *head;
  std::vector<const char *> label;
};

inline EdgeLabeledGraph make_graph(const Ring &r,
                                   std::vector<std::string> vertices,
                                   std::vector<EdgeSpec> edges) {
  std::vector<Edge> out;
  auto index = [&](const char *name) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name)
        return i;
    throw InvalidArgument(std::string("unknown vertex ") + name);
  };
  for (const auto &e : edges) {
    Edge edge{index(e.tail), index(e.head), {}};
    for (const char *g : e.label)
      edge.label.push_back(parse_polynomial(g, r));
    out.push_back(std::move(edge));
  }
  return EdgeLabeledGraph(r, std::move(vertices), std::move(out));
}

inline EdgeLabeledGraph diamond() {
  auto r = qxy();
  return make_graph(r, {"v1", "v2", "v3", "v4"},
                    {{"v1", "v2", {"y"}},
                     {"v2", "v3", {"x"}},
                     {"v3", "v4", {"y"}},
                     {"v4", "v1", {"x"}},
                     {"v1", "v3", {"x+y"}}});
}

// Vertex tuples of degree <= d satisfying every edge condition, found by
// coefficient linear algebra on the augmented matrix truncated at degree d.
inline std::vector<VectorElement> brute_force_splines(const EdgeLabeledGraph &g,
                                                      unsigned d) {
  const std::size_t nv = g.vertex_count();
  std::vector<VectorElement> out;
  ModuleMap m = build_potential_map(g);
  if (m.rows() == 0)
    m = ModuleMap(g.ring(), 1, nv);
  for (const auto &w : truncated_kernel(m, d)) {
    VectorElement v(g.ring(), nv);
    for (std::size_t i = 0; i < nv; ++i)
      v.set(i, w[i]);
    if (!v.is_zero())
      out.push_back(std::move(v));
  }
  return out;
}

// Every brute-force solution reduces to zero against a Groebner basis of the
// computed generators.
inline bool complete_up_to(const EdgeLabeledGraph &g,
                           const SplinePresentation &s, unsigned d) {
  std::vector<VectorElement> plain;
  for (const auto &v : s.generators)
    plain.emplace_back(v.components());
  auto gb = buchberger(g.ring(), std::vector<int>(g.vertex_count(), 0), plain,
                       MonomialOrder::grevlex());
  for (const auto &v : brute_force_splines(g, d))
    if (!in_span(v, gb))
      return false;
  return true;
}

} // namespace gspline::testing
