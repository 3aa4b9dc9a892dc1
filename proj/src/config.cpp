#include "krein/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace krein {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail("unknown key '" + key + "' in " + where);
  }
}

double number(const json& v, const std::string& name) {
  if (!v.is_number()) fail(name + " must be a number");
  return v.get<double>();
}

double positive(const json& v, const std::string& name) {
  const double x = number(v, name);
  if (!(x > 0.0)) fail(name + " must be positive");
  return x;
}

cplx complex_value(const json& v, const std::string& name) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(name + " must be a number or [re, im]");
}

ModelSpec parse_model(const json& m) {
  check_keys(m, "model", {"kind", "length", "points", "potential", "eps", "x_max", "h"});
  ModelSpec s;
  if (m.contains("kind")) {
    if (!m["kind"].is_string()) fail("model.kind must be a string");
    s.kind = m["kind"].get<std::string>();
  }
  if (s.kind != "shift" && s.kind != "schrodinger") fail("model.kind must be shift or schrodinger");
  if (m.contains("length")) s.length = positive(m["length"], "model.length");
  if (m.contains("points")) {
    if (!m["points"].is_number_integer() || m["points"].get<long>() < 2) fail("model.points must be an integer >= 2");
    s.points = m["points"].get<int>();
  }
  if (m.contains("potential")) {
    const json& p = m["potential"];
    check_keys(p, "model.potential", {"kind", "c"});
    if (!p.contains("kind") || !p["kind"].is_string()) fail("model.potential.kind must be a string");
    s.potential = p["kind"].get<std::string>();
    if (p.contains("c")) s.c = number(p["c"], "model.potential.c");
  }
  if (m.contains("eps")) s.eps = positive(m["eps"], "model.eps");
  if (m.contains("x_max")) s.x_max = positive(m["x_max"], "model.x_max");
  if (m.contains("h")) s.h = positive(m["h"], "model.h");
  return s;
}

std::vector<double> parse_grid(const json& g) {
  if (g.is_array()) {
    std::vector<double> out;
    for (const auto& v : g) out.push_back(number(v, "extension.grid entry"));
    return out;
  }
  check_keys(g, "extension.grid", {"start", "stop", "count"});
  if (!g.contains("count") || !g["count"].is_number_integer() || g["count"].get<long>() < 0) {
    fail("extension.grid.count must be a nonnegative integer");
  }
  const double start = g.contains("start") ? number(g["start"], "extension.grid.start") : 0.0;
  const double stop = g.contains("stop") ? number(g["stop"], "extension.grid.stop") : 2.0 * M_PI;
  const int count = g["count"].get<int>();
  // Half-open [start, stop): a full period has no duplicate endpoint.
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[k] = start + (stop - start) * k / count;
  return out;
}

ExtensionSpec parse_extension(const json& e) {
  check_keys(e, "extension", {"alpha", "unitary", "family", "grid"});
  ExtensionSpec s;
  if (e.contains("alpha")) {
    const json& a = e["alpha"];
    if (!a.is_array() || a.size() != 3) fail("extension.alpha must have 3 entries");
    for (int i = 0; i < 3; ++i) s.alpha[i] = number(a[i], "extension.alpha entry");
  }
  if (e.contains("unitary")) {
    const json& u = e["unitary"];
    if (!u.is_array() || u.size() != 2 || !u[0].is_array() || u[0].size() != 2 || !u[1].is_array() ||
        u[1].size() != 2) {
      fail("extension.unitary must be a 2x2 array");
    }
    Mat2 m;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) m(i, j) = complex_value(u[i][j], "extension.unitary entry");
    }
    s.unitary = m;
  }
  if (e.contains("family")) {
    if (!e["family"].is_string()) fail("extension.family must be a string");
    s.family = e["family"].get<std::string>();
  }
  if (e.contains("grid")) s.grid = parse_grid(e["grid"]);
  if (s.unitary && !s.family.empty()) fail("extension takes either unitary or family, not both");
  return s;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"command", "seed", "tolerance", "model", "extension", "mu", "samples", "output"});
  RunConfig c;
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) fail("command must be a string");
    c.command = doc["command"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed must be a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerance")) c.tolerance = positive(doc["tolerance"], "tolerance");
  if (doc.contains("model")) c.model = parse_model(doc["model"]);
  if (doc.contains("extension")) c.extension = parse_extension(doc["extension"]);
  if (doc.contains("mu")) {
    if (!doc["mu"].is_array()) fail("mu must be an array");
    for (const auto& v : doc["mu"]) c.mu.push_back(complex_value(v, "mu entry"));
  }
  if (doc.contains("samples")) {
    if (!doc["samples"].is_number_integer() || doc["samples"].get<long>() < 0) {
      fail("samples must be a nonnegative integer");
    }
    c.samples = doc["samples"].get<int>();
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    check_keys(o, "output", {"path", "format"});
    if (o.contains("path")) {
      if (!o["path"].is_string()) fail("output.path must be a string");
      c.out = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      if (!o["format"].is_string()) fail("output.format must be a string");
      c.format = o["format"].get<std::string>();
    }
  }
  if (c.format != "json" && c.format != "csv") fail("format must be csv or json");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace krein
