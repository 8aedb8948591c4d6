#include "doctest.h"
#include "gspline/zsplines.hpp"

#include <random>

using namespace gspline;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (const auto &r : rows) {
    std::vector<mpz_class> row;
    for (long x : r)
      row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

IntegerGraph graph(std::size_t n,
                   std::initializer_list<std::tuple<std::size_t, std::size_t, long>> edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i));
  std::vector<IntegerEdge> out;
  for (auto [t, h, m] : edges)
    out.push_back({t, h, mpz_class(m)});
  return IntegerGraph(names, out);
}

long draw(std::mt19937_64 &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c) {
  IntMatrix m(r, std::vector<mpz_class>(c));
  for (auto &row : m)
    for (auto &x : row)
      x = draw(rng, -6, 6);
  return m;
}

bool unimodular(const IntMatrix &u) { return abs(determinant(u)) == 1; }

bool is_hermite(const IntMatrix &h, std::size_t rank) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t c = 0;
    while (c < h[i].size() && h[i][c] == 0)
      ++c;
    if (i >= rank) {
      if (c != h[i].size())
        return false;
      continue;
    }
    if (c == h[i].size() || h[i][c] <= 0 || (i > 0 && c <= last))
      return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h[k][c] < 0 || h[k][c] >= h[i][c])
        return false;
    last = c;
  }
  return true;
}

} // namespace

TEST_CASE("hermite_normal_form: documented examples") {
  auto id = identity_matrix(3);
  auto f = hermite_normal_form(id);
  CHECK(f.H == id);
  CHECK(f.U == id);

  auto d = M({{2, 0}, {0, 3}});
  CHECK(hermite_normal_form(d).H == d);

  // a single row admits only the units +-1 as row operations
  CHECK(hermite_normal_form(M({{4, 6}})).H == M({{4, 6}}));
  auto g = hermite_normal_form(M({{4}, {6}}));
  CHECK(g.H == M({{2}, {0}}));
  CHECK(multiply(g.U, M({{4}, {6}})) == g.H);
}

TEST_CASE("smith_normal_form: documented examples") {
  auto s = smith_normal_form(M({{2, 0}, {0, 3}}));
  CHECK(s.S == M({{1, 0}, {0, 6}}));
  CHECK(smith_normal_form(M({{0, 0}, {0, 0}})).S == M({{0, 0}, {0, 0}}));
  CHECK(smith_normal_form(M({{1, 0}, {0, 0}})).S == M({{1, 0}, {0, 0}}));
}

TEST_CASE("determinant") {
  CHECK(determinant(M({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(M({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(M({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(determinant(M({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("property: normal forms of random matrices") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 60; ++iter) {
    auto r = static_cast<std::size_t>(draw(rng, 1, 4));
    auto c = static_cast<std::size_t>(draw(rng, 1, 4));
    auto m = random_matrix(rng, r, c);
    auto h = hermite_normal_form(m);
    CHECK(unimodular(h.U));
    CHECK(multiply(h.U, m) == h.H);
    CHECK(is_hermite(h.H, h.rank));

    auto s = smith_normal_form(m);
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
    CHECK(multiply(multiply(s.U, m), s.V) == s.S);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j)
          CHECK(s.S[i][j] == 0);
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      CHECK(s.S[i][i] >= 0);
      if (s.S[i][i] != 0)
        CHECK(s.S[i + 1][i + 1] % s.S[i][i] == 0);
      else
        CHECK(s.S[i + 1][i + 1] == 0);
    }
  }
}

TEST_CASE("integer_splines: documented examples") {
  auto two = graph(2, {{0, 1, 2}});
  auto b = integer_splines(two);
  CHECK(b.index == 2);
  // same lattice as {(1,1), (2,0)}
  CHECK(lattice_coordinates(b.basis, {1, 1}));
  CHECK(lattice_coordinates(b.basis, {2, 0}));
  auto expected = M({{1, 1}, {2, 0}});
  for (const auto &row : b.basis)
    CHECK(lattice_coordinates(expected, row));

  auto empty = graph(2, {});
  CHECK(integer_splines(empty).basis == identity_matrix(2));
  CHECK(integer_splines(empty).index == 1);

  auto tri = graph(3, {{0, 1, 2}, {1, 2, 3}, {2, 0, 4}});
  auto t = integer_splines(tri);
  CHECK(lattice_saturation_check(t, tri, 24));
  auto count = count_residue_solutions(tri);
  CHECK(count.modulus == 12);
  CHECK(t.index == count.index);

  CHECK_THROWS_AS(graph(2, {{0, 1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(graph(2, {{1, 1, 3}}), InvalidArgument);
  CHECK(graph(2, {{0, 1, -5}}).edges()[0].label == 5);
}

TEST_CASE("lattice_saturation_check: documented examples") {
  auto two = graph(2, {{0, 1, 2}});
  CHECK(lattice_saturation_check({M({{1, 1}, {2, 0}}), 2}, two, 4));
  CHECK_FALSE(lattice_saturation_check({M({{2, 2}, {4, 0}}), 8}, two, 4));
  auto empty = graph(3, {});
  CHECK(lattice_saturation_check({identity_matrix(3), 1}, empty, 3));
}

TEST_CASE("property: random integer graphs") {
  std::mt19937_64 rng(72);
  const long labels[] = {1, 2, 3, 4, 6, 12};
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = static_cast<std::size_t>(draw(rng, 1, 4));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("v" + std::to_string(i));
    std::vector<IntegerEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (draw(rng, 0, 1))
          edges.push_back({i, j, labels[draw(rng, 0, 5)]});
    IntegerGraph g(names, edges);
    auto b = integer_splines(g);
    CHECK(b.basis.size() == n);
    for (const auto &row : b.basis)
      CHECK(g.satisfies_congruences(row));
    auto count = count_residue_solutions(g);
    CHECK(b.index == count.index);
    if (n <= 3)
      CHECK(lattice_saturation_check(b, g, 2 * g.label_lcm()));
  }
}
