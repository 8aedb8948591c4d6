#include "gspline/io.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#ifndef GSPLINE_VERSION
#define GSPLINE_VERSION "0.0.0"
#endif

namespace gspline {

using nlohmann::json;

std::string version_string() { return GSPLINE_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string ring_text(const Ring &r) {
  std::string s = r->field_name() + "[";
  for (std::size_t i = 0; i < r->nvars(); ++i)
    s += (i ? ", " : "") + r->variables()[i];
  return s + "]";
}

json header(const char *command) {
  return {{"tool", "gspline"}, {"version", version_string()},
          {"command", command}};
}

json strings(const std::vector<VectorElement> &v) {
  json a = json::array();
  for (const auto &e : v)
    a.push_back(e.to_string());
  return a;
}

json series_json(const HilbertSeries &h) {
  json num = json::array();
  for (const auto &[e, c] : h.numerator)
    num.push_back({e, c});
  auto red = h.reduced();
  return {{"numerator", num},
          {"denominator_exponent", h.denominator_exponent},
          {"text", h.to_string()},
          {"reduced", red.to_string()}};
}

json betti_json(const BettiTable &b) {
  json entries = json::array();
  for (const auto &[k, v] : b.entries())
    entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  return {{"entries", entries}, {"table", b.to_string()}};
}

json instance_summary(const EdgeLabeledGraph &g) {
  return {{"ring", ring_text(g.ring())},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"graded", g.graded()},
          {"principal_labels", g.principal_labels()}};
}

json module_json(const SplineModules &m, std::size_t id) {
  json j = {{"name", module_name(id)}};
  if (m.invariants.empty()) {
    j["status"] = "unsupported (non-graded)";
    return j;
  }
  const auto &inv = m.invariants[id];
  j["zero"] = inv.zero;
  j["rank"] = inv.rank;
  j["hilbert_series"] = series_json(inv.hilbert);
  if (inv.zero) {
    j["pd"] = nullptr;
    j["depth_ab"] = nullptr;
    j["depth_regseq"] = nullptr;
  } else {
    j["pd"] = inv.pd;
    j["depth_ab"] = inv.depth_ab;
    j["depth_regseq"] = inv.depth_regseq ? json(*inv.depth_regseq) : json();
    j["betti"] = betti_json(inv.betti);
  }
  return j;
}

json freeness_json(const FreenessVerdict &v) {
  json j = {{"status", v.status_text()}, {"rank", v.rank}};
  if (v.status == FreenessStatus::unsupported) {
    j["free"] = nullptr;
    j["pd"] = nullptr;
    return j;
  }
  j["free"] = v.free;
  j["pd"] = v.pd;
  j["basis"] = strings(v.basis);
  j["basis_degrees"] = v.basis_degrees;
  return j;
}

json sequences_json(const ExactSequenceReport &r) {
  json j = {{"potential_ok", r.potential_ok()},
            {"copotential_ok", r.copotential_ok()},
            {"potential_rank_ok", r.potential_rank_ok},
            {"copotential_rank_ok", r.copotential_rank_ok},
            {"ranks", r.ranks},
            {"hilbert_applicable", r.hilbert_applicable}};
  if (r.hilbert_applicable) {
    j["potential_hilbert_ok"] = r.potential_hilbert_ok;
    j["copotential_hilbert_ok"] = r.copotential_hilbert_ok;
    j["hilbert"] = {{"potential_splines", r.series[0].to_string()},
                    {"splines_plus_cosplines", r.series[1].to_string()},
                    {"potential_cosplines", r.series[2].to_string()},
                    {"cosplines_plus_failed", r.series[3].to_string()}};
  } else {
    j["potential_hilbert_ok"] = "not-applicable";
    j["copotential_hilbert_ok"] = "not-applicable";
  }
  return j;
}

json checks_json(const std::vector<NamedCheck> &checks) {
  json a = json::array();
  for (const auto &c : checks)
    a.push_back({{"name", c.name},
                 {"status", check_status_name(c.status)},
                 {"detail", c.detail}});
  return a;
}

std::string opt_int(const json &j) {
  return j.is_null() ? "-" : std::to_string(j.get<int>());
}

void module_table(std::ostringstream &out, const json &modules) {
  out << "modules:\n";
  out << "  " << std::left << std::setw(22) << "name" << std::right
      << std::setw(6) << "zero" << std::setw(5) << "pd" << std::setw(11)
      << "depth(AB)" << std::setw(15) << "depth(regseq)" << std::setw(6)
      << "rank" << "\n";
  for (const auto &m : modules) {
    out << "  " << std::left << std::setw(22) << m["name"].get<std::string>()
        << std::right;
    if (m.contains("status")) {
      out << "  " << m["status"].get<std::string>() << "\n";
      continue;
    }
    out << std::setw(6) << (m["zero"].get<bool>() ? "yes" : "no")
        << std::setw(5) << opt_int(m["pd"]) << std::setw(11)
        << opt_int(m["depth_ab"]) << std::setw(15) << opt_int(m["depth_regseq"])
        << std::setw(6) << m["rank"].get<int>() << "\n";
  }
}

void instance_lines(std::ostringstream &out, const EdgeLabeledGraph &g) {
  out << "ring: " << ring_text(g.ring()) << "\n";
  out << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count()
      << "  graded: " << (g.graded() ? "yes" : "no")
      << "  principal labels: " << (g.principal_labels() ? "yes" : "no")
      << "\n";
}

} // namespace

Report compute_report(const EdgeLabeledGraph &g, const ReportOptions &opt) {
  auto t0 = Clock::now();
  Report r;
  json &doc = r.document;
  doc = header("compute");
  doc["seed"] = opt.seed;
  doc["instance"] = instance_summary(g);
  SplineModules m = compute_modules(g, opt.seed, opt.cosplines);
  FreenessVerdict v = freeness_verdict(g, m);
  json gens = strings(m.splines.generators);
  doc["splines"] = {{"generators", gens}};
  if (m.splines.graded)
    doc["splines"]["degrees"] = m.splines.generator_degrees;
  doc["freeness"] = freeness_json(v);
  if (v.betti)
    doc["betti"] = betti_json(*v.betti);
  json modules = json::array();
  for (std::size_t i = 0; i < m.modules.size(); ++i)
    modules.push_back(module_json(m, i));
  doc["modules"] = modules;
  if (opt.cosplines)
    doc["exact_sequences"] = sequences_json(verify_fundamental_sequences(g, m));
  else
    doc["exact_sequences"] = "not computed (--no-cosplines)";
  r.exit_code = m.splines.graded ? 0 : 3;
  if (opt.timing)
    doc["timing"] = {{"seconds", seconds_since(t0)}};

  std::ostringstream out;
  out << "gspline " << version_string() << " compute\n";
  instance_lines(out, g);
  out << "spline generators:\n";
  for (std::size_t i = 0; i < m.splines.generators.size(); ++i) {
    out << "  ";
    if (m.splines.graded)
      out << "deg " << m.splines.generator_degrees[i] << "  ";
    out << m.splines.generators[i].to_string() << "\n";
  }
  out << "freeness: " << v.status_text();
  if (v.status != FreenessStatus::unsupported)
    out << " (pd " << v.pd << ", rank " << v.rank << ")";
  else
    out << " (rank " << v.rank << ")";
  out << "\n";
  if (v.betti)
    out << "betti table of the spline module:\n" << v.betti->to_string();
  if (v.hilbert)
    out << "hilbert series of the spline module: " << v.hilbert->to_string()
        << "\n";
  module_table(out, doc["modules"]);
  if (opt.cosplines) {
    const json &es = doc["exact_sequences"];
    out << "exact sequences: potential "
        << (es["potential_ok"].get<bool>() ? "ok" : "FAILED") << ", copotential "
        << (es["copotential_ok"].get<bool>() ? "ok" : "FAILED");
    if (!es["hilbert_applicable"].get<bool>())
      out << " (rank identities only; hilbert identities not-applicable)";
    out << "\n";
  } else {
    out << "exact sequences: not computed (--no-cosplines)\n";
  }
  if (opt.timing)
    out << "time: " << std::fixed << std::setprecision(3)
        << doc["timing"]["seconds"].get<double>() << " s\n";
  r.text = out.str();
  return r;
}

Report verify_report(const EdgeLabeledGraph &g, const ReportOptions &opt) {
  auto t0 = Clock::now();
  Report r;
  json &doc = r.document;
  doc = header("verify");
  doc["seed"] = opt.seed;
  doc["instance"] = instance_summary(g);
  std::ostringstream out;
  out << "gspline " << version_string() << " verify\n";
  instance_lines(out, g);
  if (!g.graded()) {
    doc["status"] = "unsupported (non-graded)";
    doc["passed"] = nullptr;
    r.exit_code = 3;
    out << "unsupported (non-graded): the check battery needs homogeneous "
           "labels\n";
    r.text = out.str();
    return r;
  }
  Verification v = verify_instance(g, opt.seed);
  std::size_t pass = 0, failed = 0, na = 0;
  for (const auto &c : v.checks)
    (c.status == CheckStatus::pass     ? pass
     : c.status == CheckStatus::fail   ? failed
                                       : na)++;
  doc["checks"] = checks_json(v.checks);
  doc["summary"] = {{"pass", pass}, {"fail", failed}, {"not_applicable", na}};
  doc["passed"] = failed == 0;
  doc["freeness"] = freeness_json(v.freeness);
  doc["exact_sequences"] = sequences_json(v.sequences);
  json modules = json::array();
  for (std::size_t i = 0; i < module_count; ++i)
    modules.push_back(module_json(v.modules, i));
  doc["modules"] = modules;
  r.exit_code = failed == 0 ? 0 : 1;
  if (opt.timing)
    doc["timing"] = {{"seconds", seconds_since(t0)}};

  module_table(out, modules);
  out << "freeness: " << v.freeness.status_text() << " (pd " << v.freeness.pd
      << ", rank " << v.freeness.rank << ")\n";
  out << "checks:\n";
  for (const auto &c : v.checks) {
    const char *tag = c.status == CheckStatus::pass   ? "pass"
                      : c.status == CheckStatus::fail ? "FAIL"
                                                      : "n/a ";
    out << "  [" << tag << "] " << c.name;
    if (!c.detail.empty())
      out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "summary: " << pass << " passed, " << failed << " failed, " << na
      << " not applicable\n";
  for (const auto *c : v.failures())
    out << "failed check: " << c->name << ": " << c->detail << "\n";
  if (opt.timing)
    out << "time: " << std::fixed << std::setprecision(3)
        << doc["timing"]["seconds"].get<double>() << " s\n";
  r.text = out.str();
  return r;
}

namespace {

json int_rows(const IntMatrix &m) {
  json a = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &x : row)
      r.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
    a.push_back(r);
  }
  return a;
}

std::string row_text(const std::vector<mpz_class> &row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i)
    s += (i ? ", " : "") + row[i].get_str();
  return s + ")";
}

// Exhaustive oracles are run only below this many candidate vectors.
const mpz_class enumeration_limit = 2000000;

} // namespace

Report zsplines_report(const IntegerGraph &g, const ReportOptions &opt) {
  auto t0 = Clock::now();
  Report r;
  json &doc = r.document;
  doc = header("zsplines");
  const std::size_t nv = g.vertex_count();
  doc["instance"] = {{"ring", "Z"},
                     {"vertices", nv},
                     {"edges", g.edges().size()}};
  auto b = integer_splines(g);
  mpz_class lcm = g.label_lcm();
  doc["basis"] = int_rows(b.basis);
  doc["index"] = b.index.get_str();
  doc["lcm"] = lcm.get_str();
  bool ok = true;

  mpz_class bound = 2 * lcm, candidates;
  mpz_pow_ui(candidates.get_mpz_t(), bound.get_mpz_t(), nv);
  if (candidates <= enumeration_limit) {
    bool sat = lattice_saturation_check(b, g, bound);
    ok = ok && sat;
    doc["saturation"] = {{"bound", bound.get_str()}, {"status", sat ? "pass" : "fail"}};
  } else {
    doc["saturation"] = {{"bound", bound.get_str()},
                         {"status", "not-applicable"},
                         {"detail", "search space too large"}};
  }
  mpz_pow_ui(candidates.get_mpz_t(), lcm.get_mpz_t(), nv);
  if (candidates <= enumeration_limit) {
    auto count = count_residue_solutions(g);
    bool same = count.index == b.index;
    ok = ok && same;
    doc["residue_index"] = {{"solutions", count.solutions.get_str()},
                            {"index", count.index.get_str()},
                            {"status", same ? "pass" : "fail"}};
  } else {
    doc["residue_index"] = {{"status", "not-applicable"},
                            {"detail", "search space too large"}};
  }
  doc["passed"] = ok;
  r.exit_code = ok ? 0 : 1;
  if (opt.timing)
    doc["timing"] = {{"seconds", seconds_since(t0)}};

  std::ostringstream out;
  out << "gspline " << version_string() << " zsplines\n";
  out << "vertices: " << nv << "  edges: " << g.edges().size()
      << "  lcm of labels: " << lcm.get_str() << "\n";
  out << "basis:\n";
  for (const auto &row : b.basis)
    out << "  " << row_text(row) << "\n";
  out << "index: " << b.index.get_str() << "\n";
  out << "saturation (bound " << bound.get_str()
      << "): " << doc["saturation"]["status"].get<std::string>() << "\n";
  out << "index by residue count: "
      << doc["residue_index"]["status"].get<std::string>();
  if (doc["residue_index"].contains("index"))
    out << " (" << doc["residue_index"]["index"].get<std::string>() << ")";
  out << "\n";
  if (opt.timing)
    out << "time: " << std::fixed << std::setprecision(3)
        << doc["timing"]["seconds"].get<double>() << " s\n";
  r.text = out.str();
  return r;
}

Report batch_report(const BatchParams &p, bool timing) {
  if (p.count == 0)
    throw InvalidArgument("count must be positive");
  if (p.max_vertices < 2 || p.max_vertices > 8)
    throw InvalidArgument("max vertices must lie in 2..8");
  auto t0 = Clock::now();
  Report r;
  json &doc = r.document;
  doc = header("batch");
  doc["parameters"] = {{"count", p.count},
                       {"max_vertices", p.max_vertices},
                       {"edge_probability", p.edge_probability},
                       {"max_degree", p.max_degree},
                       {"principal", p.principal},
                       {"seed", p.seed}};
  json runs = json::array();
  std::size_t passed = 0, free_full_rank = 0;
  std::ostringstream out;
  out << "gspline " << version_string() << " batch\n";
  for (std::size_t i = 0; i < p.count; ++i) {
    RandomParams rp;
    rp.seed = p.seed + i;
    rp.vertices = 2 + static_cast<std::size_t>(rp.seed % (p.max_vertices - 1));
    rp.edge_probability = p.edge_probability;
    rp.max_degree = p.max_degree;
    rp.principal = p.principal;
    auto g = random_instance(rp);
    auto v = verify_instance(g, rp.seed);
    bool full = v.freeness.free &&
                v.freeness.rank == static_cast<int>(g.vertex_count());
    passed += v.passed();
    free_full_rank += full;
    json failures = json::array();
    for (const auto *c : v.failures())
      failures.push_back(c->name);
    runs.push_back({{"seed", rp.seed},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"free", v.freeness.free},
                    {"rank", v.freeness.rank},
                    {"pd", v.freeness.pd},
                    {"passed", v.passed()},
                    {"failed_checks", failures}});
    out << "seed " << rp.seed << ": |V|=" << g.vertex_count()
        << " |E|=" << g.edge_count() << " " << v.freeness.status_text()
        << " (pd " << v.freeness.pd << ", rank " << v.freeness.rank << ") "
        << (v.passed() ? "pass" : "FAIL") << "\n";
    for (const auto *c : v.failures())
      out << "  failed check: " << c->name << ": " << c->detail << "\n";
  }
  doc["runs"] = runs;
  doc["summary"] = {{"instances", p.count},
                    {"passed", passed},
                    {"failed", p.count - passed},
                    {"free_of_rank_|V|", free_full_rank}};
  r.exit_code = passed == p.count ? 0 : 1;
  out << "summary: " << passed << "/" << p.count << " instances passed every "
      << "applicable check; " << free_full_rank << "/" << p.count
      << " free of rank |V|\n";
  if (timing) {
    doc["timing"] = {{"seconds", seconds_since(t0)}};
    out << "time: " << std::fixed << std::setprecision(3)
        << doc["timing"]["seconds"].get<double>() << " s\n";
  }
  r.text = out.str();
  return r;
}

} // namespace gspline
