#pragma once

// Instance files, report documents and random instances.
//
// Instance format:
//   {"ring": {"variables": ["x", "y"], "field": "Q"},
//    "vertices": ["v1", "v2"],
//    "edges": [{"tail": "v1", "head": "v2", "label": ["x"]}],
//    "flags": {"graded": true}}
// Integer instances use "ring": {"integers": true} and numeric labels.
// "field" is "Q" or "GF(p)"; "flags" is optional.

#include "gspline/splines.hpp"
#include "gspline/zsplines.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace gspline {

using Instance = std::variant<EdgeLabeledGraph, IntegerGraph>;

// Malformed documents raise ParseError; well-formed documents describing an
// invalid graph raise InvalidArgument.
Instance parse_instance(const std::string &text);
Instance load_instance(const std::string &path);

nlohmann::json instance_to_json(const EdgeLabeledGraph &g);
nlohmann::json instance_to_json(const IntegerGraph &g);

struct Report {
  nlohmann::json document;
  std::string text;
  int exit_code = 0; // 0 ok, 1 failed check, 3 unsupported
};

struct ReportOptions {
  std::uint64_t seed = 1;
  bool cosplines = true;
  bool timing = false;
};

Report compute_report(const EdgeLabeledGraph &g, const ReportOptions &opt);
Report verify_report(const EdgeLabeledGraph &g, const ReportOptions &opt);
Report zsplines_report(const IntegerGraph &g, const ReportOptions &opt);

struct RandomParams {
  std::size_t vertices = 4;       // 1..8
  double edge_probability = 0.5;  // [0, 1]
  unsigned max_degree = 2;        // 1..3
  bool principal = true;
  std::uint64_t seed = 1;
};

void validate(const RandomParams &p);
// Deterministic in the parameters. Labels are nonzero homogeneous
// polynomials in Q[x,y]: a product of random linear forms when principal,
// two or three such products otherwise.
EdgeLabeledGraph random_instance(const RandomParams &p);

struct BatchParams {
  std::size_t count = 10;
  std::size_t max_vertices = 6; // instance i gets 2 + seed_i % (max - 1)
  double edge_probability = 0.5;
  unsigned max_degree = 3;
  bool principal = true;
  std::uint64_t seed = 1;
};

Report batch_report(const BatchParams &p, bool timing = false);

std::string version_string();

} // namespace gspline
