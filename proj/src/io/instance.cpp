#include "gspline/io.hpp"

#include <fstream>
#include <sstream>

namespace gspline {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &what) { throw ParseError(what, 0); }

const json &member(const json &obj, const char *key, const std::string &where) {
  if (!obj.is_object())
    fail(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end())
    fail(where + " is missing \"" + key + "\"");
  return *it;
}

std::string text_of(const json &j, const std::string &where) {
  if (!j.is_string())
    fail(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> vertex_names(const json &doc) {
  const json &vs = member(doc, "vertices", "instance");
  if (!vs.is_array())
    fail("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i)
    names.push_back(text_of(vs[i], "vertex " + std::to_string(i)));
  return names;
}

const json &edge_list(const json &doc) {
  static const json empty = json::array();
  auto it = doc.find("edges");
  if (it == doc.end())
    return empty;
  if (!it->is_array())
    fail("\"edges\" must be an array");
  return *it;
}

std::size_t endpoint(const json &edge, const char *key,
                     const std::vector<std::string> &names,
                     const std::string &where) {
  std::string v = text_of(member(edge, key, where), where + " " + key);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == v)
      return i;
  throw InvalidArgument(where + ": unknown vertex '" + v + "'");
}

Ring parse_ring(const json &ring) {
  const json &vars = member(ring, "variables", "ring");
  if (!vars.is_array())
    fail("\"variables\" must be an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i)
    names.push_back(text_of(vars[i], "variable " + std::to_string(i)));
  std::uint32_t p = 0;
  auto f = ring.find("field");
  if (f != ring.end()) {
    std::string field = text_of(*f, "\"field\"");
    if (field == "Q" || field == "QQ") {
      p = 0;
    } else if (field.size() > 4 && field.rfind("GF(", 0) == 0 &&
               field.back() == ')') {
      std::string digits = field.substr(3, field.size() - 4);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos ||
          digits.size() > 10)
        fail("bad field \"" + field + "\"");
      unsigned long long v = std::stoull(digits);
      if (v > 0xffffffffULL)
        fail("field characteristic too large");
      p = static_cast<std::uint32_t>(v);
    } else {
      fail("unknown field \"" + field + "\" (expected Q or GF(p))");
    }
  }
  return RingSpec::make(names, p);
}

mpz_class integer_label(const json &j, const std::string &where) {
  const json *v = &j;
  if (j.is_array()) {
    if (j.size() != 1)
      fail(where + ": integer labels have exactly one generator");
    v = &j[0];
  }
  if (v->is_number_integer())
    return mpz_class(v->dump());
  if (v->is_string()) {
    mpz_class m;
    std::string s = v->get<std::string>();
    if (s.empty() || m.set_str(s, 10) != 0)
      fail(where + ": not an integer: \"" + s + "\"");
    return m;
  }
  fail(where + ": integer label expected");
}

IntegerGraph parse_integer_graph(const json &doc) {
  auto names = vertex_names(doc);
  std::vector<IntegerEdge> edges;
  const json &es = edge_list(doc);
  for (std::size_t e = 0; e < es.size(); ++e) {
    std::string where = "edge " + std::to_string(e);
    IntegerEdge edge;
    edge.tail = endpoint(es[e], "tail", names, where);
    edge.head = endpoint(es[e], "head", names, where);
    edge.label = integer_label(member(es[e], "label", where), where);
    edges.push_back(std::move(edge));
  }
  return IntegerGraph(std::move(names), std::move(edges));
}

EdgeLabeledGraph parse_polynomial_graph(const json &doc, const Ring &ring) {
  auto names = vertex_names(doc);
  std::vector<Edge> edges;
  const json &es = edge_list(doc);
  for (std::size_t e = 0; e < es.size(); ++e) {
    std::string where = "edge " + std::to_string(e);
    Edge edge;
    edge.tail = endpoint(es[e], "tail", names, where);
    edge.head = endpoint(es[e], "head", names, where);
    const json &label = member(es[e], "label", where);
    std::vector<std::string> gens;
    if (label.is_string()) {
      gens.push_back(label.get<std::string>());
    } else if (label.is_array()) {
      for (std::size_t k = 0; k < label.size(); ++k)
        gens.push_back(text_of(label[k], where + " label"));
    } else {
      fail(where + ": label must be a string or an array of strings");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      try {
        edge.label.push_back(parse_polynomial(gens[k], ring));
      } catch (const ParseError &err) {
        throw ParseError(where + " label " + std::to_string(k) + ": " +
                             err.what(),
                         err.position());
      }
    }
    edges.push_back(std::move(edge));
  }
  return EdgeLabeledGraph(ring, std::move(names), std::move(edges));
}

} // namespace

Instance parse_instance(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed instance document: ") + e.what(),
                     e.byte);
  }
  try {
    const json &ring = member(doc, "ring", "instance");
    auto ints = ring.is_object() ? ring.find("integers") : ring.end();
    if (ints != ring.end() && ints->is_boolean() && ints->get<bool>())
      return parse_integer_graph(doc);
    EdgeLabeledGraph g = parse_polynomial_graph(doc, parse_ring(ring));
    auto flags = doc.find("flags");
    if (flags != doc.end() && flags->is_object()) {
      auto graded = flags->find("graded");
      if (graded != flags->end() && graded->is_boolean() &&
          graded->get<bool>() != g.graded())
        throw InvalidArgument(graded->get<bool>()
                                  ? "instance is flagged graded but has "
                                    "inhomogeneous labels"
                                  : "instance is flagged non-graded but all "
                                    "labels are homogeneous");
    }
    return g;
  } catch (const json::exception &e) {
    throw ParseError(std::string("malformed instance document: ") + e.what(), 0);
  }
}

Instance load_instance(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json instance_to_json(const EdgeLabeledGraph &g) {
  json doc;
  const auto &ring = g.ring();
  doc["ring"]["variables"] = ring->variables();
  doc["ring"]["field"] = ring->field_name();
  doc["vertices"] = g.vertices();
  doc["edges"] = json::array();
  for (const auto &e : g.edges()) {
    json labels = json::array();
    for (const auto &f : e.label)
      labels.push_back(f.to_string());
    doc["edges"].push_back({{"tail", g.vertices()[e.tail]},
                            {"head", g.vertices()[e.head]},
                            {"label", labels}});
  }
  return doc;
}

json instance_to_json(const IntegerGraph &g) {
  json doc;
  doc["ring"]["integers"] = true;
  doc["vertices"] = g.vertices();
  doc["edges"] = json::array();
  for (const auto &e : g.edges())
    doc["edges"].push_back({{"tail", g.vertices()[e.tail]},
                            {"head", g.vertices()[e.head]},
                            {"label", json::array({e.label.fits_slong_p()
                                                      ? json(e.label.get_si())
                                                      : json(e.label.get_str())})}});
  return doc;
}

} // namespace gspline
