#include "doctest.h"
#include "support.hpp"

#include "gspline/io.hpp"

#include <fstream>
#include <sstream>

using namespace gspline;
using namespace gspline::testing;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string source_path(const std::string &rel) {
  return std::string(GSPLINE_SOURCE_DIR) + "/" + rel;
}

const EdgeLabeledGraph &poly(const Instance &i) {
  return std::get<EdgeLabeledGraph>(i);
}

} // namespace

TEST_CASE("parse_instance: polynomial instance") {
  auto inst = parse_instance(R"({
    "ring": {"variables": ["x", "y"], "field": "Q"},
    "vertices": ["a", "b", "c"],
    "edges": [{"tail": "a", "head": "b", "label": "x^2 - y^2"},
              {"tail": "c", "head": "b", "label": ["x", "y"]}]})");
  const auto &g = poly(inst);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[1].tail == 2);
  CHECK(g.edges()[1].head == 1);
  CHECK(g.label_kind(0) == LabelKind::principal);
  CHECK(g.label_kind(1) == LabelKind::general);
  CHECK(g.graded());
}

TEST_CASE("parse_instance: finite field and missing edges") {
  auto inst = parse_instance(R"json({
    "ring": {"variables": ["x"], "field": "GF(5)"},
    "vertices": ["a"]})json");
  const auto &g = poly(inst);
  CHECK(g.edge_count() == 0);
  CHECK(g.ring()->characteristic() == 5);
}

TEST_CASE("parse_instance: integer instance") {
  auto inst = parse_instance(R"({
    "ring": {"integers": true},
    "vertices": ["a", "b", "c"],
    "edges": [{"tail": "a", "head": "b", "label": 2},
              {"tail": "b", "head": "c", "label": "-3"},
              {"tail": "a", "head": "c", "label": [4]}]})");
  const auto &g = std::get<IntegerGraph>(inst);
  CHECK(g.label_lcm() == 12);
  CHECK(g.edges()[1].label == 3);
}

TEST_CASE("parse_instance: malformed documents") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"]})"), ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"ring": {"variables": ["x"]}, "vertices": "a"})"),
      ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "b", "label": 3}]})"),
                  ParseError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "b", "label": ["x", "x +* 1"]}]})"),
                       doctest::Contains("edge 0 label 1"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "b", "label": ["z"]}]})"),
                  ParseError);
}

TEST_CASE("parse_instance: invalid graphs") {
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "q", "label": "x"}]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "a"]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "a", "label": "x"}]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"variables": ["x", "y"]},
      "vertices": ["a", "b"],
      "edges": [{"tail": "a", "head": "b", "label": "x + 1"}],
      "flags": {"graded": true}})"),
                  InvalidArgument);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), InvalidArgument);
}

TEST_CASE("instance_to_json round trip") {
  for (const char *name :
       {"instances/diamond.json", "instances/maximal_ideal_edge.json",
        "instances/non_graded_edge.json", "instances/integer_triangle_2_3_4.json",
        "instances/no_edges.json"}) {
    CAPTURE(name);
    auto inst = load_instance(source_path(name));
    auto doc = std::visit([](const auto &g) { return instance_to_json(g); }, inst);
    auto again = parse_instance(doc.dump());
    auto doc2 =
        std::visit([](const auto &g) { return instance_to_json(g); }, again);
    CHECK(doc == doc2);
  }
}

TEST_CASE("random_instance: deterministic and well-formed") {
  RandomParams p;
  p.vertices = 6;
  p.max_degree = 3;
  p.seed = 42;
  CHECK(instance_to_json(random_instance(p)).dump() ==
        instance_to_json(random_instance(p)).dump());
  RandomParams q = p;
  q.seed = 43;
  CHECK(instance_to_json(random_instance(p)).dump() !=
        instance_to_json(random_instance(q)).dump());

  for (std::uint64_t s = 1; s <= 20; ++s) {
    p.seed = s;
    p.principal = true;
    auto g = random_instance(p);
    CHECK(g.graded());
    CHECK(g.principal_labels());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      CHECK(g.edges()[e].label.size() == 1);
      int d = g.edges()[e].label[0].total_degree();
      CHECK(d >= 1);
      CHECK(d <= 3);
    }
    p.principal = false;
    auto h = random_instance(p);
    CHECK(h.graded());
    for (const auto &e : h.edges()) {
      CHECK(e.label.size() >= 2);
      CHECK(e.label.size() <= 3);
    }
  }

  p.edge_probability = 1.0;
  CHECK(random_instance(p).edge_count() == 15);
  p.edge_probability = 0.0;
  CHECK(random_instance(p).edge_count() == 0);
}

TEST_CASE("random_instance: parameter validation") {
  RandomParams p;
  p.vertices = 0;
  CHECK_THROWS_AS(random_instance(p), InvalidArgument);
  p = RandomParams{};
  p.max_degree = 4;
  CHECK_THROWS_AS(random_instance(p), InvalidArgument);
  p = RandomParams{};
  p.edge_probability = 1.5;
  CHECK_THROWS_AS(random_instance(p), InvalidArgument);
}

TEST_CASE("compute_report: diamond graph golden output") {
  auto g = poly(load_instance(source_path("instances/diamond.json")));
  ReportOptions opt;
  auto r = compute_report(g, opt);
  CHECK(r.exit_code == 0);
  CHECK(r.text == read_file(source_path("tests/golden/diamond_compute.txt")));
  CHECK(r.document.dump(2) + "\n" ==
        read_file(source_path("tests/golden/diamond_compute.json")));
  CHECK(r.document["freeness"]["free"] == true);
  CHECK(r.document["freeness"]["pd"] == 0);
  CHECK(r.document["freeness"]["rank"] == 4);
  CHECK_FALSE(r.document.contains("timing"));
  CHECK(compute_report(g, opt).document == r.document);

  opt.timing = true;
  CHECK(compute_report(g, opt).document.contains("timing"));
  opt.timing = false;
  opt.cosplines = false;
  auto nc = compute_report(g, opt);
  CHECK(nc.exit_code == 0);
  CHECK(nc.document["exact_sequences"] == "not computed (--no-cosplines)");
}

TEST_CASE("compute_report and verify_report: non-graded instances") {
  auto g = poly(load_instance(source_path("instances/non_graded_edge.json")));
  auto c = compute_report(g, {});
  CHECK(c.exit_code == 3);
  CHECK(c.document["freeness"]["status"] == "unsupported (non-graded)");
  CHECK(c.document["splines"]["generators"].size() == 2);
  auto v = verify_report(g, {});
  CHECK(v.exit_code == 3);
}

TEST_CASE("verify_report: bundled graded instances pass") {
  for (const char *name :
       {"instances/diamond.json", "instances/principal_edge.json",
        "instances/maximal_ideal_edge.json", "instances/triangle_x.json",
        "instances/no_edges.json"}) {
    CAPTURE(name);
    auto g = poly(load_instance(source_path(name)));
    auto r = verify_report(g, {});
    CHECK(r.exit_code == 0);
    CHECK(r.document["passed"] == true);
    CHECK(r.document["summary"]["fail"] == 0);
  }
}

TEST_CASE("zsplines_report: 2-3-4 triangle") {
  auto inst = load_instance(source_path("instances/integer_triangle_2_3_4.json"));
  auto r = zsplines_report(std::get<IntegerGraph>(inst), {});
  CHECK(r.exit_code == 0);
  CHECK(r.document["index"] == "24");
  CHECK(r.document["lcm"] == "12");
}

TEST_CASE("batch_report: deterministic summary") {
  BatchParams p;
  p.count = 5;
  p.seed = 7;
  auto a = batch_report(p);
  auto b = batch_report(p);
  CHECK(a.document == b.document);
  CHECK(a.text == b.text);
  CHECK(a.exit_code == 0);
  CHECK(a.document["runs"].size() == 5);
}
