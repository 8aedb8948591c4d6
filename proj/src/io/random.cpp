#include "gspline/io.hpp"

#include <cmath>
#include <random>

namespace gspline {

namespace {

// Distribution-free draws so instances do not depend on the standard
// library implementation.
long draw(std::mt19937_64 &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double unit_interval(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Polynomial linear_form(std::mt19937_64 &rng, const Ring &r) {
  for (;;) {
    long a = draw(rng, -3, 3), b = draw(rng, -3, 3);
    if (a == 0 && b == 0)
      continue;
    return Polynomial::variable(r, 0).scaled(mpq_class(a)) +
           Polynomial::variable(r, 1).scaled(mpq_class(b));
  }
}

Polynomial form_product(std::mt19937_64 &rng, const Ring &r, unsigned max_degree) {
  Polynomial f = linear_form(rng, r);
  for (long k = draw(rng, 1, max_degree); k > 1; --k)
    f = f * linear_form(rng, r);
  return f;
}

} // namespace

void validate(const RandomParams &p) {
  if (p.vertices < 1 || p.vertices > 8)
    throw InvalidArgument("vertex count must lie in 1..8");
  if (!(p.edge_probability >= 0.0 && p.edge_probability <= 1.0))
    throw InvalidArgument("edge probability must lie in [0, 1]");
  if (p.max_degree < 1 || p.max_degree > 3)
    throw InvalidArgument("maximal label degree must lie in 1..3");
}

EdgeLabeledGraph random_instance(const RandomParams &p) {
  validate(p);
  auto ring = RingSpec::make({"x", "y"});
  std::mt19937_64 rng(p.seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.vertices; ++i)
    names.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.vertices; ++i)
    for (std::size_t j = i + 1; j < p.vertices; ++j) {
      if (unit_interval(rng) >= p.edge_probability)
        continue;
      Edge e;
      bool flip = draw(rng, 0, 1) == 1;
      e.tail = flip ? j : i;
      e.head = flip ? i : j;
      long gens = p.principal ? 1 : draw(rng, 2, 3);
      for (long k = 0; k < gens; ++k)
        e.label.push_back(form_product(rng, ring, p.max_degree));
      edges.push_back(std::move(e));
    }
  return EdgeLabeledGraph(ring, std::move(names), std::move(edges));
}

} // namespace gspline
