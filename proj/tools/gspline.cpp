#include "gspline/gspline.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

// Exit codes: 0 ok, 1 failed check, 2 parse or input error, 3 unsupported,
// 4 internal error.
int exit_code(gs_status s) {
  switch (s) {
  case GS_OK:
    return 0;
  case GS_CHECK_FAILED:
    return 1;
  case GS_ERR_PARSE:
  case GS_ERR_INVALID:
    return 2;
  case GS_ERR_UNSUPPORTED:
    return 3;
  default:
    return 4;
  }
}

struct Owned {
  char *p = nullptr;
  ~Owned() { gs_string_free(p); }
};

struct Handle {
  gs_instance *p = nullptr;
  ~Handle() { gs_instance_free(p); }
};

int report_error(gs_status s) {
  std::cerr << "gspline: " << gs_status_name(s) << ": " << gs_last_error()
            << "\n";
  return exit_code(s);
}

bool write_file(const std::string &path, const char *content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "gspline: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct Output {
  std::string out_path;
  bool json = false;
  bool timing = false;
};

void add_output_flags(CLI::App *cmd, Output &o) {
  cmd->add_option("--out", o.out_path, "Write the JSON report to this path");
  cmd->add_flag("--json", o.json, "Print the JSON report instead of text");
  cmd->add_flag("--timing", o.timing, "Include wall-clock timing");
}

// Prints a report produced by one of the gs_* report functions. The report
// exists for GS_OK, GS_CHECK_FAILED and GS_ERR_UNSUPPORTED.
int finish(gs_status s, Owned &json, Owned &text, const Output &o) {
  if (!json.p)
    return report_error(s);
  std::fputs(o.json ? json.p : text.p, stdout);
  if (!o.out_path.empty() && !write_file(o.out_path, json.p))
    return 2;
  if (s != GS_OK)
    std::cerr << "gspline: " << gs_status_name(s) << ": " << gs_last_error()
              << "\n";
  return exit_code(s);
}

unsigned flags_of(const Output &o, bool no_cosplines = false) {
  unsigned f = 0;
  if (o.timing)
    f |= GS_REPORT_TIMING;
  if (no_cosplines)
    f |= GS_REPORT_NO_COSPLINES;
  return f;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized splines on edge-labeled graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gs_version()));

  std::string path;
  std::uint64_t seed = 1;
  bool no_cosplines = false;
  Output out;

  auto *compute = app.add_subcommand("compute", "Spline module, freeness and invariants");
  compute->add_option("instance", path, "Instance file")->required();
  compute->add_option("--seed", seed, "Seed for the regular-sequence oracle");
  compute->add_flag("--no-cosplines", no_cosplines,
                    "Skip the cospline and failed cospline modules");
  add_output_flags(compute, out);

  auto *verify = app.add_subcommand("verify", "Run the full check battery");
  verify->add_option("instance", path, "Instance file")->required();
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  add_output_flags(verify, out);

  gs_random_params rp{4, 0.5, 2, 1, 1};
  bool non_principal = false;
  auto *random = app.add_subcommand("random", "Generate a random instance");
  random->add_option("--vertices", rp.vertices, "Number of vertices (1..8)");
  random->add_option("--edge-probability", rp.edge_probability,
                     "Probability of each edge");
  random->add_option("--max-degree", rp.max_degree, "Maximal label degree (1..3)");
  random->add_option("--seed", rp.seed, "Seed");
  random->add_flag("--non-principal", non_principal,
                   "Labels with two or three generators");
  random->add_option("--out", out.out_path, "Write the instance to this path");

  auto *zsplines = app.add_subcommand("zsplines", "Integer splines of an integer-labeled instance");
  zsplines->add_option("instance", path, "Instance file")->required();
  add_output_flags(zsplines, out);

  gs_batch_params bp{10, 6, 0.5, 3, 1, 1};
  auto *batch = app.add_subcommand("batch", "Verify a series of random instances");
  batch->add_option("--count", bp.count, "Number of instances");
  batch->add_option("--seed", bp.seed, "Seed of the first instance");
  batch->add_option("--vertices", bp.max_vertices, "Maximal vertex count (2..8)");
  batch->add_option("--edge-probability", bp.edge_probability,
                    "Probability of each edge");
  batch->add_option("--max-degree", bp.max_degree, "Maximal label degree (1..3)");
  batch->add_flag("--non-principal", non_principal,
                  "Labels with two or three generators");
  add_output_flags(batch, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  if (*random) {
    rp.principal = !non_principal;
    Handle h;
    if (auto s = gs_random_instance(&rp, &h.p); s != GS_OK)
      return report_error(s);
    Owned json;
    if (auto s = gs_instance_to_json(h.p, &json.p); s != GS_OK)
      return report_error(s);
    if (!out.out_path.empty())
      return write_file(out.out_path, json.p) ? 0 : 2;
    std::fputs(json.p, stdout);
    return 0;
  }

  if (*batch) {
    bp.principal = !non_principal;
    Owned json, text;
    auto s = gs_batch(&bp, flags_of(out), &json.p, &text.p);
    return finish(s, json, text, out);
  }

  Handle h;
  if (auto s = gs_instance_load(path.c_str(), &h.p); s != GS_OK)
    return report_error(s);
  Owned json, text;
  gs_status s;
  if (*compute)
    s = gs_compute(h.p, seed, flags_of(out, no_cosplines), &json.p, &text.p);
  else if (*verify)
    s = gs_verify(h.p, seed, flags_of(out), &json.p, &text.p);
  else
    s = gs_zsplines(h.p, flags_of(out), &json.p, &text.p);
  return finish(s, json, text, out);
}
