#include "doctest.h"
#include "support.hpp"

using namespace gspline;
using namespace gspline::testing;

TEST_CASE("parse: documented examples") {
  auto r = qxy();
  CHECK(P(r, "0").is_zero());

  auto f = P(r, "x + y");
  REQUIRE(f.term_count() == 2);
  CHECK(f == Polynomial::variable(r, 0) + Polynomial::variable(r, 1));

  CHECK(P(r, "(x+y)^2 - x^2 - 2*x*y") == P(r, "y^2"));
}

TEST_CASE("parse: rationals, unary minus, whitespace") {
  auto r = qxy();
  CHECK(P(r, "-x") == -Polynomial::variable(r, 0));
  CHECK(P(r, " 3/6 * x ") == Polynomial::variable(r, 0).scaled(mpq_class(1, 2)));
  CHECK(P(r, "(3/2)^2") == Polynomial::constant(r, mpq_class(9, 4)));
  CHECK(P(r, "-(x - y)") == P(r, "y - x"));
  CHECK(P(r, "x*y*x") == P(r, "x^2*y"));
  CHECK(P(r, "x^0") == P(r, "1"));
}

TEST_CASE("parse: errors carry positions") {
  auto r = qxy();
  try {
    P(r, "x + z");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "x ** y"), ParseError);
  CHECK_THROWS_AS(P(r, "(x"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0"), ParseError);
  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(P(r, "x - - y"), ParseError);
}

TEST_CASE("ring spec validation") {
  CHECK_THROWS_AS(RingSpec::make({"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(RingSpec::make({"1x"}), InvalidArgument);
  CHECK_THROWS_AS(RingSpec::make({"x"}, 4), InvalidArgument);
  CHECK_NOTHROW(RingSpec::make({"x", "y_2"}, 32003));
}

TEST_CASE("prime field arithmetic") {
  auto r = RingSpec::make({"x", "y"}, 7);
  CHECK(P(r, "3*x + 4*x").is_zero());
  CHECK(P(r, "1/2") == P(r, "4"));
  CHECK(P(r, "-1") == P(r, "6"));
  CHECK_THROWS_AS(P(r, "1/7"), ParseError);
  CHECK(P(r, "(x+y)^7") == P(r, "x^7 + y^7"));
}

TEST_CASE("poly_op examples") {
  auto r = qxy();
  auto f = P(r, "x^2 - 3*y + 1/2");
  CHECK(poly_op(PolyOp::add, f, Polynomial::zero(r)) == f);
  CHECK(poly_op(PolyOp::mul, P(r, "x"), P(r, "y")) == P(r, "x*y"));
  CHECK(poly_op(PolyOp::mul, P(r, "x+y"), P(r, "x-y")) == P(r, "x^2-y^2"));
  CHECK(poly_op(PolyOp::sub, f, f).is_zero());
  CHECK(poly_op(PolyOp::scale, f, P(r, "2")) == P(r, "2*x^2 - 6*y + 1"));
  CHECK_THROWS_AS(poly_op(PolyOp::scale, f, P(r, "x")), InvalidArgument);
  auto other = RingSpec::make({"x", "z"});
  CHECK_THROWS_AS(poly_op(PolyOp::add, f, P(other, "z")), RingMismatch);
}

TEST_CASE("monomial_compare examples") {
  auto m = [](std::uint32_t a, std::uint32_t b) { return Monomial({a, b}); };
  CHECK(monomial_compare(MonomialOrder::grevlex(), m(2, 0), m(1, 1)) > 0);
  CHECK(monomial_compare(MonomialOrder::lex(), m(1, 0), m(0, 5)) > 0);
  CHECK(monomial_compare(MonomialOrder::grevlex(), m(0, 5), m(1, 0)) > 0);
  for (auto o : {MonomialOrder::grevlex(), MonomialOrder::lex()})
    CHECK(monomial_compare(o, m(3, 1), m(3, 1)) == 0);
  CHECK_THROWS_AS(monomial_compare(MonomialOrder::lex(), m(1, 0), Monomial({1})),
                  InvalidArgument);
}

TEST_CASE("grevlex agrees with the degree-then-reverse-lex rule") {
  // Brute force over all monomials of degree <= 3 in three variables.
  auto monos = monomials_up_to(3, 3);
  auto rule = [](const Monomial &a, const Monomial &b) {
    if (a.degree() != b.degree())
      return a.degree() > b.degree() ? 1 : -1;
    // the last nonzero entry of a - b is negative  <=>  a > b
    for (std::size_t i = 3; i-- > 0;)
      if (a[i] != b[i])
        return static_cast<long>(a[i]) - static_cast<long>(b[i]) < 0 ? 1 : -1;
    return 0;
  };
  for (const auto &a : monos)
    for (const auto &b : monos) {
      auto c = monomial_compare(MonomialOrder::grevlex(), a, b);
      int expect = rule(a, b);
      CHECK((c > 0 ? 1 : c < 0 ? -1 : 0) == expect);
    }
}

TEST_CASE("is_homogeneous examples") {
  auto r = qxy();
  auto h = is_homogeneous(P(r, "x+y"));
  CHECK(h.homogeneous);
  CHECK(h.degree == 1);
  CHECK_FALSE(is_homogeneous(P(r, "x^2+y")).homogeneous);
  h = is_homogeneous(P(r, "x^2+x*y"));
  CHECK(h.homogeneous);
  CHECK(h.degree == 2);
  h = is_homogeneous(P(r, "0"));
  CHECK(h.homogeneous);
  CHECK_FALSE(h.degree.has_value());
}

TEST_CASE("property: print/parse round trip") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {0u, 32003u}) {
    auto r = RingSpec::make({"x", "y", "z1"}, p);
    for (int i = 0; i < 200; ++i) {
      auto f = random_poly(rng, r, static_cast<unsigned>(draw(rng, 0, 6)), 3);
      auto text = f.to_string();
      CAPTURE(text);
      CHECK(P(r, text) == f);
      CHECK(P(r, text).to_string() == text);
    }
  }
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {0u, 101u}) {
    auto r = RingSpec::make({"x", "y"}, p);
    for (int i = 0; i < 100; ++i) {
      auto a = random_poly(rng, r, 4, 2);
      auto b = random_poly(rng, r, 4, 2);
      auto c = random_poly(rng, r, 3, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - b) + b == a);
      if (!b.is_zero())
        CHECK(exact_divide(a * b, b) == a);
    }
  }
}

TEST_CASE("property: order axioms") {
  std::mt19937_64 rng(13);
  MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex()};
  Monomial one(std::vector<std::uint32_t>{0, 0, 0});
  for (const auto &o : orders) {
    for (int i = 0; i < 2000; ++i) {
      auto a = random_monomial(rng, 3, 4);
      auto b = random_monomial(rng, 3, 4);
      auto c = random_monomial(rng, 3, 4);
      auto ab = o.compare(a, b), ba = o.compare(b, a);
      CHECK((ab < 0) == (ba > 0));
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && o.compare(b, c) < 0)
        CHECK(o.compare(a, c) < 0);
      if (ab < 0)
        CHECK(o.compare(a * c, b * c) < 0);
      CHECK(o.compare(one, a) <= 0);
    }
  }
}

TEST_CASE("exact_divide rejects non-divisors") {
  auto r = qxy();
  CHECK_THROWS_AS(exact_divide(P(r, "x^2 + 1"), P(r, "x")), Error);
  CHECK(exact_divide(P(r, "x^2 - y^2"), P(r, "x + y")) == P(r, "x - y"));
}

TEST_CASE("vector elements: degrees and arithmetic") {
  auto r = qxy();
  auto v = V(r, {"x", "1"}, {0, 1});
  CHECK(v.homogeneous_degree() == 1);
  CHECK_FALSE(V(r, {"x", "1"}).homogeneous_degree().has_value());
  CHECK((v - v).is_zero());
  CHECK(v.hadamard(V(r, {"y", "x"})) == V(r, {"x*y", "x"}));
  CHECK(v.to_string() == "(x, 1)");
}
