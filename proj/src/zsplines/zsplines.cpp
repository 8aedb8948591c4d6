#include "gspline/zsplines.hpp"

#include <algorithm>
#include <set>

namespace gspline {

namespace {

std::size_t width(const IntMatrix &m, std::size_t cols) {
  return m.empty() ? cols : m[0].size();
}

void check_rectangular(const IntMatrix &m) {
  for (const auto &row : m)
    if (row.size() != m[0].size())
      throw InvalidArgument("ragged integer matrix");
}

mpz_class floor_div(const mpz_class &a, const mpz_class &b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
void gcdext(const mpz_class &a, const mpz_class &b, mpz_class &g, mpz_class &s,
            mpz_class &t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// rows (i, k) <- (s*row_i + t*row_k, -b/g*row_i + a/g*row_k) in m and u.
void combine_rows(IntMatrix &m, IntMatrix &u, std::size_t i, std::size_t k,
                  const mpz_class &a, const mpz_class &b) {
  mpz_class g, s, t;
  gcdext(a, b, g, s, t);
  mpz_class p = -b / g, q = a / g;
  for (IntMatrix *x : {&m, &u})
    for (std::size_t c = 0; c < (*x)[i].size(); ++c) {
      mpz_class ri = (*x)[i][c], rk = (*x)[k][c];
      (*x)[i][c] = s * ri + t * rk;
      (*x)[k][c] = p * ri + q * rk;
    }
}

void combine_cols(IntMatrix &m, IntMatrix &v, std::size_t j, std::size_t k,
                  const mpz_class &a, const mpz_class &b) {
  mpz_class g, s, t;
  gcdext(a, b, g, s, t);
  mpz_class p = -b / g, q = a / g;
  for (auto &row : m) {
    mpz_class cj = row[j], ck = row[k];
    row[j] = s * cj + t * ck;
    row[k] = p * cj + q * ck;
  }
  for (auto &row : v) {
    mpz_class cj = row[j], ck = row[k];
    row[j] = s * cj + t * ck;
    row[k] = p * cj + q * ck;
  }
}

} // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
  if (a.empty())
    return {};
  if (a[0].size() != b.size())
    throw InvalidArgument("matrix dimensions do not match");
  std::size_t n = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix transpose(const IntMatrix &a, std::size_t cols) {
  std::size_t n = width(a, cols);
  IntMatrix t(n, std::vector<mpz_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[j][i] = a[i][j];
  return t;
}

mpz_class determinant(const IntMatrix &a) {
  const std::size_t n = a.size();
  for (const auto &row : a)
    if (row.size() != n)
      throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0)
    return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

HermiteForm hermite_normal_form(const IntMatrix &m, std::size_t cols) {
  check_rectangular(m);
  const std::size_t rows = m.size(), n = width(m, cols);
  HermiteForm f{m, identity_matrix(rows), 0};
  auto &H = f.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i)
      if (H[i][c] != 0)
        combine_rows(H, f.U, r, i, H[r][c], H[i][c]);
    if (H[r][c] == 0)
      continue;
    if (H[r][c] < 0) {
      for (auto &x : H[r])
        x = -x;
      for (auto &x : f.U[r])
        x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(H[i][c], H[r][c]);
      if (q == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        H[i][j] -= q * H[r][j];
      for (std::size_t j = 0; j < rows; ++j)
        f.U[i][j] -= q * f.U[r][j];
    }
    ++r;
  }
  f.rank = r;
  return f;
}

SmithForm smith_normal_form(const IntMatrix &m, std::size_t cols) {
  check_rectangular(m);
  const std::size_t rows = m.size(), n = width(m, cols);
  SmithForm f{m, identity_matrix(rows), identity_matrix(n)};
  auto &S = f.S;
  for (std::size_t t = 0; t < std::min(rows, n); ++t) {
    // smallest nonzero entry of the remaining block becomes the pivot
    std::size_t pi = rows, pj = n;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S[i][j] != 0 && (pi == rows || abs(S[i][j]) < abs(S[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows)
      break;
    std::swap(S[t], S[pi]);
    std::swap(f.U[t], f.U[pi]);
    for (auto &row : S)
      std::swap(row[t], row[pj]);
    for (auto &row : f.V)
      std::swap(row[t], row[pj]);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (S[i][t] != 0) {
          combine_rows(S, f.U, t, i, S[t][t], S[i][t]);
          dirty = true;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (S[t][j] != 0) {
          combine_cols(S, f.V, t, j, S[t][t], S[t][j]);
          dirty = true;
        }
      if (dirty)
        continue;
      // the pivot must divide the rest of the block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S[i][j] % S[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      for (std::size_t j = 0; j < n; ++j)
        S[t][j] += S[bad][j];
      for (std::size_t j = 0; j < rows; ++j)
        f.U[t][j] += f.U[bad][j];
    }
    if (S[t][t] < 0) {
      for (auto &x : S[t])
        x = -x;
      for (auto &x : f.U[t])
        x = -x;
    }
  }
  return f;
}

// ------------------------------------------------------------------ graph

IntegerGraph::IntegerGraph(std::vector<std::string> vertices,
                           std::vector<IntegerEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty())
    throw InvalidArgument("a graph needs at least one vertex");
  std::set<std::string> seen;
  for (const auto &v : vertices_)
    if (v.empty() || !seen.insert(v).second)
      throw InvalidArgument("vertex names must be nonempty and unique");
  for (auto &e : edges_) {
    if (e.tail >= vertices_.size() || e.head >= vertices_.size())
      throw InvalidArgument("edge endpoint out of range");
    if (e.tail == e.head)
      throw InvalidArgument("self-loop");
    if (e.label == 0)
      throw InvalidArgument("integer labels must be nonzero");
    e.label = abs(e.label);
  }
}

mpz_class IntegerGraph::label_lcm() const {
  mpz_class l = 1;
  for (const auto &e : edges_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.label.get_mpz_t());
  return l;
}

bool IntegerGraph::satisfies_congruences(const std::vector<mpz_class> &r) const {
  if (r.size() != vertices_.size())
    throw InvalidArgument("vector length does not match the vertex count");
  for (const auto &e : edges_)
    if (mpz_class(r[e.tail] - r[e.head]) % e.label != 0)
      return false;
  return true;
}

// ---------------------------------------------------------------- splines

IntegerSplineBasis integer_splines(const IntegerGraph &g) {
  const std::size_t nv = g.vertex_count(), ne = g.edges().size();
  // rows of [B | D]^T: one per vertex, then one per edge label
  IntMatrix mt(nv + ne, std::vector<mpz_class>(ne, 0));
  for (std::size_t e = 0; e < ne; ++e) {
    const auto &edge = g.edges()[e];
    mt[edge.tail][e] += 1;
    mt[edge.head][e] -= 1;
    mt[nv + e][e] = edge.label;
  }
  auto hnf = hermite_normal_form(mt, ne);
  IntMatrix generators;
  for (std::size_t i = hnf.rank; i < nv + ne; ++i)
    generators.emplace_back(hnf.U[i].begin(),
                            hnf.U[i].begin() + static_cast<std::ptrdiff_t>(nv));
  auto reduced = hermite_normal_form(generators, nv);
  if (reduced.rank != nv)
    throw Error("internal: integer spline lattice is not of full rank");
  IntegerSplineBasis b;
  b.basis.assign(reduced.H.begin(),
                 reduced.H.begin() + static_cast<std::ptrdiff_t>(nv));
  b.index = abs(determinant(b.basis));
  for (const auto &row : b.basis)
    if (!g.satisfies_congruences(row))
      throw Error("internal: integer spline basis violates a congruence");
  return b;
}

std::optional<std::vector<mpz_class>>
lattice_coordinates(const IntMatrix &basis, const std::vector<mpz_class> &v) {
  const std::size_t n = v.size();
  auto hnf = hermite_normal_form(basis, n);
  std::vector<mpz_class> rest = v, y(basis.size(), 0);
  std::size_t c = 0;
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    while (hnf.H[k][c] == 0) {
      if (rest[c] != 0)
        return std::nullopt;
      ++c;
    }
    if (rest[c] % hnf.H[k][c] != 0)
      return std::nullopt;
    mpz_class q = rest[c] / hnf.H[k][c];
    for (std::size_t j = c; j < n; ++j)
      rest[j] -= q * hnf.H[k][j];
    // y = q * U[k] accumulated over pivot rows
    for (std::size_t j = 0; j < basis.size(); ++j)
      y[j] += q * hnf.U[k][j];
    ++c;
  }
  for (const auto &x : rest)
    if (x != 0)
      return std::nullopt;
  return y;
}

bool lattice_saturation_check(const IntegerSplineBasis &b, const IntegerGraph &g,
                              const mpz_class &bound) {
  const std::size_t nv = g.vertex_count();
  if (bound <= 0)
    throw InvalidArgument("bound must be positive");
  std::vector<mpz_class> r(nv, 0);
  for (;;) {
    if (g.satisfies_congruences(r) && !lattice_coordinates(b.basis, r))
      return false;
    std::size_t i = 0;
    while (i < nv && ++r[i] == bound)
      r[i++] = 0;
    if (i == nv)
      return true;
  }
}

ResidueCount count_residue_solutions(const IntegerGraph &g) {
  const std::size_t nv = g.vertex_count();
  ResidueCount c{g.label_lcm(), 0, 0};
  std::vector<mpz_class> r(nv, 0);
  for (;;) {
    if (g.satisfies_congruences(r))
      ++c.solutions;
    std::size_t i = 0;
    while (i < nv && ++r[i] == c.modulus)
      r[i++] = 0;
    if (i == nv)
      break;
  }
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), c.modulus.get_mpz_t(), nv);
  c.index = total / c.solutions;
  return c;
}

} // namespace gspline
