#include "gspline/gspline.h"
#include "gspline/io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct gs_instance {
  gspline::Instance value;
};

namespace {

thread_local std::string last_error;

gs_status fail(gs_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F> gs_status guarded(F &&f) {
  try {
    last_error.clear();
    return f();
  } catch (const gspline::ParseError &e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const gspline::NotGraded &e) {
    return fail(GS_ERR_UNSUPPORTED, e.what());
  } catch (const gspline::InvalidArgument &e) {
    return fail(GS_ERR_INVALID, e.what());
  } catch (const gspline::RingMismatch &e) {
    return fail(GS_ERR_INVALID, e.what());
  } catch (const std::bad_alloc &) {
    return fail(GS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(GS_ERR_INTERNAL, e.what());
  }
}

gs_status emit(const gspline::Report &r, char **json, char **text) {
  std::string doc = r.document.dump(2) + "\n";
  char *j = json ? dup(doc) : nullptr;
  char *t = nullptr;
  try {
    t = text ? dup(r.text) : nullptr;
  } catch (...) {
    std::free(j);
    throw;
  }
  if (json)
    *json = j;
  if (text)
    *text = t;
  if (r.exit_code == 1)
    return fail(GS_CHECK_FAILED, "one or more checks failed");
  if (r.exit_code == 3)
    return fail(GS_ERR_UNSUPPORTED, "unsupported (non-graded)");
  return GS_OK;
}

const gspline::EdgeLabeledGraph *polynomial_graph(const gs_instance *inst) {
  if (!inst)
    throw gspline::InvalidArgument("null instance");
  auto *g = std::get_if<gspline::EdgeLabeledGraph>(&inst->value);
  if (!g)
    throw gspline::InvalidArgument("instance has integer labels; use zsplines");
  return g;
}

gspline::ReportOptions options(uint64_t seed, unsigned flags) {
  gspline::ReportOptions o;
  o.seed = seed;
  o.cosplines = !(flags & GS_REPORT_NO_COSPLINES);
  o.timing = flags & GS_REPORT_TIMING;
  return o;
}

} // namespace

extern "C" {

const char *gs_version(void) {
  static const std::string v = gspline::version_string();
  return v.c_str();
}

const char *gs_last_error(void) { return last_error.c_str(); }

const char *gs_status_name(gs_status status) {
  switch (status) {
  case GS_OK:
    return "ok";
  case GS_CHECK_FAILED:
    return "check failed";
  case GS_ERR_PARSE:
    return "parse error";
  case GS_ERR_UNSUPPORTED:
    return "unsupported";
  case GS_ERR_INVALID:
    return "invalid argument";
  case GS_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void gs_string_free(char *s) { std::free(s); }

gs_status gs_instance_load(const char *path, gs_instance **out) {
  return guarded([&] {
    if (!path || !out)
      return fail(GS_ERR_INVALID, "null argument");
    *out = new gs_instance{gspline::load_instance(path)};
    return GS_OK;
  });
}

gs_status gs_instance_parse(const char *json_text, gs_instance **out) {
  return guarded([&] {
    if (!json_text || !out)
      return fail(GS_ERR_INVALID, "null argument");
    *out = new gs_instance{gspline::parse_instance(json_text)};
    return GS_OK;
  });
}

void gs_instance_free(gs_instance *inst) { delete inst; }

int gs_instance_is_integer(const gs_instance *inst) {
  return inst && std::holds_alternative<gspline::IntegerGraph>(inst->value);
}

size_t gs_instance_vertex_count(const gs_instance *inst) {
  if (!inst)
    return 0;
  return std::visit([](const auto &g) { return g.vertex_count(); }, inst->value);
}

size_t gs_instance_edge_count(const gs_instance *inst) {
  if (!inst)
    return 0;
  return std::visit([](const auto &g) { return g.edges().size(); },
                    inst->value);
}

gs_status gs_instance_flip_edge(gs_instance *inst, size_t edge) {
  return guarded([&] {
    const auto *g = polynomial_graph(inst);
    inst->value = gspline::orientation_flip(*g, edge);
    return GS_OK;
  });
}

gs_status gs_instance_to_json(const gs_instance *inst, char **json) {
  return guarded([&] {
    if (!inst || !json)
      return fail(GS_ERR_INVALID, "null argument");
    auto doc = std::visit(
        [](const auto &g) { return gspline::instance_to_json(g); }, inst->value);
    *json = dup(doc.dump(2) + "\n");
    return GS_OK;
  });
}

gs_status gs_compute(const gs_instance *inst, uint64_t seed, unsigned flags,
                     char **json, char **text) {
  return guarded([&] {
    return emit(gspline::compute_report(*polynomial_graph(inst),
                                        options(seed, flags)),
                json, text);
  });
}

gs_status gs_verify(const gs_instance *inst, uint64_t seed, unsigned flags,
                    char **json, char **text) {
  return guarded([&] {
    return emit(gspline::verify_report(*polynomial_graph(inst),
                                       options(seed, flags)),
                json, text);
  });
}

gs_status gs_zsplines(const gs_instance *inst, unsigned flags, char **json,
                      char **text) {
  return guarded([&] {
    if (!inst)
      return fail(GS_ERR_INVALID, "null instance");
    auto *g = std::get_if<gspline::IntegerGraph>(&inst->value);
    if (!g)
      return fail(GS_ERR_INVALID,
                  "instance has polynomial labels; zsplines needs integers");
    return emit(gspline::zsplines_report(*g, options(0, flags)), json, text);
  });
}

gs_status gs_batch(const gs_batch_params *params, unsigned flags, char **json,
                   char **text) {
  return guarded([&] {
    if (!params)
      return fail(GS_ERR_INVALID, "null parameters");
    gspline::BatchParams p;
    p.count = params->count;
    p.max_vertices = params->max_vertices;
    p.edge_probability = params->edge_probability;
    p.max_degree = params->max_degree;
    p.principal = params->principal != 0;
    p.seed = params->seed;
    gspline::RandomParams probe;
    probe.edge_probability = p.edge_probability;
    probe.max_degree = p.max_degree;
    gspline::validate(probe);
    return emit(gspline::batch_report(p, flags & GS_REPORT_TIMING), json, text);
  });
}

gs_status gs_random_instance(const gs_random_params *params, gs_instance **out) {
  return guarded([&] {
    if (!params || !out)
      return fail(GS_ERR_INVALID, "null argument");
    gspline::RandomParams p;
    p.vertices = params->vertices;
    p.edge_probability = params->edge_probability;
    p.max_degree = params->max_degree;
    p.principal = params->principal != 0;
    p.seed = params->seed;
    *out = new gs_instance{gspline::random_instance(p)};
    return GS_OK;
  });
}

gs_status gs_freeness_verdict(const gs_instance *inst, gs_freeness *out) {
  return guarded([&] {
    if (!out)
      return fail(GS_ERR_INVALID, "null argument");
    auto v = gspline::freeness_verdict(*polynomial_graph(inst));
    out->supported = v.status != gspline::FreenessStatus::unsupported;
    out->free = v.free;
    out->pd = v.pd;
    out->rank = v.rank;
    return out->supported ? GS_OK
                          : fail(GS_ERR_UNSUPPORTED, "unsupported (non-graded)");
  });
}

} // extern "C"
