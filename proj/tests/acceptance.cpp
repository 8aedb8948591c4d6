// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include "support.hpp"

#include "gspline/io.hpp"
#include "gspline/splines.hpp"
#include "gspline/zsplines.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace gspline;
using namespace gspline::testing;

namespace {

struct Computed {
  std::string name;
  EdgeLabeledGraph graph;
  Verification v;
};

std::vector<Computed> computed;

const Computed &run(const std::string &name, const EdgeLabeledGraph &g,
                    std::uint64_t seed) {
  computed.push_back({name, g, verify_instance(g, seed)});
  return computed.back();
}

bool check_named(const Verification &v, const std::string &prefix,
                 std::string &why) {
  bool ok = true;
  for (const auto &c : v.checks)
    if (c.name.rfind(prefix, 0) == 0 && c.status == CheckStatus::fail) {
      why += " " + c.name + ": " + c.detail + ";";
      ok = false;
    }
  return ok;
}

int failures = 0;

void report(int n, const std::string &title,
            const std::function<bool(std::string &)> &body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception &e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  if (!ok)
    ++failures;
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n,
              title.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

EdgeLabeledGraph maximal_ideal_edge() {
  auto r = qxy();
  return make_graph(r, {"u", "v"}, {{"u", "v", {"x", "y"}}});
}

RandomParams principal_params(std::uint64_t seed) {
  RandomParams p;
  p.vertices = 2 + seed % 5;
  p.edge_probability = 0.5;
  p.max_degree = 3;
  p.principal = true;
  p.seed = seed;
  return p;
}

RandomParams general_params(std::uint64_t seed) {
  RandomParams p = principal_params(seed);
  p.principal = false;
  return p;
}

constexpr std::size_t principal_count = 50;
constexpr std::size_t general_count = 20;
constexpr std::uint64_t general_seed = 1001;

} // namespace

int main() {
  const std::uint64_t seed = 1;

  report(1, "diamond graph spline module is free of rank 4 with pd 0",
         [&](std::string &d) {
           const auto &c = run("diamond", diamond(), seed);
           const auto &f = c.v.freeness;
           d = "free=" + std::to_string(f.free) + " pd=" + std::to_string(f.pd) +
               " rank=" + std::to_string(f.rank);
           return f.status == FreenessStatus::free && f.free && f.pd == 0 &&
                  f.rank == 4;
         });

  report(2, "diamond graph depths and oracle agreement", [&](std::string &d) {
    const auto &v = computed.front().v;
    const auto &dp = v.depth.depths;
    std::ostringstream os;
    bool agree = true;
    for (std::size_t i = 0; i < module_count; ++i) {
      os << module_name(i) << "=" << dp[i].depth_ab;
      if (!dp[i].zero) {
        os << "/" << (dp[i].depth_regseq ? std::to_string(*dp[i].depth_regseq)
                                         : std::string("?"));
        agree = agree && dp[i].depth_regseq == dp[i].depth_ab;
      }
      os << " ";
    }
    d = os.str();
    return agree && dp[potential_splines_id].depth_ab == 2 &&
           dp[potential_cosplines_id].depth_ab == 1 &&
           dp[cosplines_id].depth_ab >= 1 && dp[splines_id].depth_ab == 2;
  });

  report(3, "50 random principal instances are free of rank |V|",
         [&](std::string &d) {
           std::size_t ok = 0;
           for (std::uint64_t s = 1; s <= principal_count; ++s) {
             const auto &c = run("principal seed " + std::to_string(s),
                                 random_instance(principal_params(s)), s);
             const auto &f = c.v.freeness;
             if (f.free && f.rank == static_cast<int>(c.graph.vertex_count()))
               ++ok;
             else
               d += " seed " + std::to_string(s) + " not free of rank |V|;";
           }
           d = std::to_string(ok) + "/" + std::to_string(principal_count) + d;
           return ok == principal_count;
         });

  report(4, "maximal ideal edge is not free, pd 1, depth 1",
         [&](std::string &d) {
           const auto &c = run("maximal ideal edge", maximal_ideal_edge(), seed);
           const auto &f = c.v.freeness;
           int depth = c.v.depth.depths[splines_id].depth_ab;
           d = "free=" + std::to_string(f.free) + " pd=" + std::to_string(f.pd) +
               " depth=" + std::to_string(depth);
           return f.status == FreenessStatus::not_free && !f.free && f.pd == 1 &&
                  depth == 1;
         });

  report(5, "Hilbert series additivity on both exact sequences",
         [&](std::string &d) {
           std::size_t ok = 0;
           for (const auto &c : computed) {
             const auto &s = c.v.sequences;
             if (s.hilbert_applicable && s.potential_hilbert_ok &&
                 s.copotential_hilbert_ok)
               ++ok;
             else
               d += " " + c.name + ";";
           }
           d = std::to_string(ok) + "/" + std::to_string(computed.size()) + d;
           return ok == computed.size();
         });

  report(6, "depth inequalities on 50 principal and 20 non-principal instances",
         [&](std::string &d) {
           for (std::uint64_t i = 0; i < general_count; ++i) {
             std::uint64_t s = general_seed + i;
             run("general seed " + std::to_string(s),
                 random_instance(general_params(s)), s);
           }
           std::size_t tested = 0, ok = 0, applied = 0;
           for (const auto &c : computed) {
             if (c.name.rfind("principal", 0) != 0 &&
                 c.name.rfind("general", 0) != 0)
               continue;
             ++tested;
             for (const auto &k : c.v.depth.checks)
               if (k.status != CheckStatus::not_applicable &&
                   (k.name.rfind("potential.", 0) == 0 ||
                    k.name.rfind("copotential.", 0) == 0))
                 ++applied;
             std::string why;
             if (check_named(c.v, "potential.", why) &&
                 check_named(c.v, "copotential.", why))
               ++ok;
             else
               d += " " + c.name + ":" + why;
           }
           d = std::to_string(ok) + "/" + std::to_string(tested) + " instances, " +
               std::to_string(applied) + " applicable inequalities" + d;
           return tested == principal_count + general_count && ok == tested;
         });

  report(7, "degree-3 brute-force splines lie in the computed span for |V| <= 3",
         [&](std::string &d) {
           auto r = qxy();
           const std::vector<std::vector<const char *>> labels = {
               {"x"}, {"y"}, {"x+y"}, {"x^2"}, {"x", "y"}};
           std::size_t graphs = 0, ok = 0;
           auto check = [&](const std::vector<std::string> &names,
                            const std::vector<EdgeSpec> &edges) {
             auto g = make_graph(r, names, edges);
             const auto &c =
                 run("completeness graph " + std::to_string(graphs), g, seed);
             ++graphs;
             if (complete_up_to(g, c.v.modules.splines, 3))
               ++ok;
             else
               d += " " + c.name + ";";
           };
           check({"a"}, {});
           for (int l = -1; l < 5; ++l) {
             std::vector<EdgeSpec> e;
             if (l >= 0)
               e.push_back({"a", "b", labels[l]});
             check({"a", "b"}, e);
           }
           const std::pair<const char *, const char *> pairs[3] = {
               {"a", "b"}, {"a", "c"}, {"b", "c"}};
           for (int a = -1; a < 5; ++a)
             for (int b = -1; b < 5; ++b)
               for (int c = -1; c < 5; ++c) {
                 std::vector<EdgeSpec> e;
                 int choice[3] = {a, b, c};
                 for (int k = 0; k < 3; ++k)
                   if (choice[k] >= 0)
                     e.push_back({pairs[k].first, pairs[k].second,
                                  labels[choice[k]]});
                 check({"a", "b", "c"}, e);
               }
           d = std::to_string(ok) + "/" + std::to_string(graphs) + " graphs" + d;
           return ok == graphs;
         });

  report(8, "integer 2-3-4 triangle saturation and residue-count index",
         [&](std::string &d) {
           IntegerGraph g({"a", "b", "c"},
                          {{0, 1, 2}, {1, 2, 3}, {0, 2, 4}});
           auto b = integer_splines(g);
           bool sat = lattice_saturation_check(b, g, 24);
           auto rc = count_residue_solutions(g);
           d = "lcm=" + rc.modulus.get_str() + " index=" + b.index.get_str() +
               " residue index=" + rc.index.get_str() +
               " saturation=" + (sat ? "pass" : "fail");
           return sat && rc.modulus == 12 && b.index == rc.index;
         });

  report(9, "structural invariants on every computed instance",
         [&](std::string &d) {
           std::size_t ok = 0;
           for (const auto &c : computed) {
             std::string why;
             bool good = check_named(c.v, "structure.", why);
             int length = c.v.modules.invariants[splines_id].pd;
             if (length > 2) {
               good = false;
               why += " pd " + std::to_string(length) + " > 2;";
             }
             if (good)
               ++ok;
             else
               d += " " + c.name + ":" + why;
           }
           d = std::to_string(ok) + "/" + std::to_string(computed.size()) +
               " instances" + d;
           return ok == computed.size();
         });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
