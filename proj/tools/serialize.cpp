#include "serialize.hpp"

#include <sstream>

#include "cluster/errors.hpp"

namespace cluster::io {

ordered_json to_json(const BeltLattice& lattice) {
  const auto names = variable_names(lattice.type);
  const auto labels = slot_labels(lattice.type);
  ordered_json rows = ordered_json::array();
  for (const auto& row : lattice.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row)
      r.push_back({{"col", e.col + 1},
                   {"label", labels[e.col]},
                   {"sup", e.sup},
                   {"poly", to_string(e.value, names)}});
    rows.push_back(std::move(r));
  }
  return {{"type", family_tag(lattice.type.family)}, {"rank", lattice.type.rank}, {"rows", rows}};
}

ordered_json to_json(const TileGraph& g) {
  ordered_json tiles = ordered_json::array();
  for (const auto& t : g.tiles) {
    ordered_json edges = ordered_json::array();
    for (const auto& w : t.edges) edges.push_back(to_string(w, g.var_names));
    ordered_json tile = {{"label", t.label}, {"shape", shape_name(t.shape)}, {"edges", edges}};
    if (t.rotated) tile["rotated"] = true;
    tiles.push_back(std::move(tile));
  }
  ordered_json gluings = ordered_json::array();
  for (const auto& gl : g.gluings) {
    ordered_json j = {{"tile_a", gl.a}, {"edge_a", gl.ea}, {"tile_b", gl.b}, {"edge_b", gl.eb}};
    if (gl.twisted) j["twisted"] = true;
    if (gl.exempt) j["exempt"] = true;
    gluings.push_back(std::move(j));
  }
  ordered_json arcs = ordered_json::array();
  for (const auto& a : g.arcs)
    arcs.push_back({{"tile_a", a.a}, {"corner_a", a.ca}, {"tile_b", a.b}, {"corner_b", a.cb}});
  return {{"kind", g.kind}, {"tiles", tiles}, {"gluings", gluings}, {"arcs", arcs}, {"mu", g.mu}};
}

ordered_json to_json(const MatchingGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", to_string(e.weight, g.var_names)}, {"from", e.note}});
  return {{"vertices", g.vertex_names}, {"edges", edges}};
}

ordered_json to_json(const CheckResult& r, bool timings) {
  ordered_json j = {{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"summary", r.summary}};
  if (!r.counterexample.empty()) {
    ordered_json c = ordered_json::object();
    for (const auto& [k, v] : r.counterexample) c[k] = v;
    j["counterexample"] = c;
  }
  if (!r.notes.empty()) {
    ordered_json n = ordered_json::object();
    for (const auto& [k, v] : r.notes) n[k] = v;
    j["notes"] = n;
  }
  if (timings) j["seconds"] = r.seconds;
  return j;
}

ordered_json to_json(const VerificationReport& r, bool timings) {
  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c, timings));
    failed += c.pass ? 0 : 1;
  }
  return {{"status", r.pass() ? "pass" : "fail"},
          {"checks_run", r.checks.size()},
          {"checks_failed", failed},
          {"checks", checks}};
}

ordered_json roots_json(const std::vector<RootVector>& roots) {
  ordered_json out = ordered_json::array();
  for (const auto& r : roots) out.push_back(r);
  return out;
}

ordered_json variables_json(DynkinType t, const std::map<RootVector, Laurent>& vars) {
  const auto names = variable_names(t);
  ordered_json out = ordered_json::array();
  for (const auto& [root, v] : vars) {
    auto f = split(v);
    out.push_back({{"root", root},
                   {"numerator", to_string(f.numerator, names)},
                   {"denominator", f.denominator},
                   {"fraction", to_fraction_string(v, names)}});
  }
  return out;
}

RootVector parse_root(const std::string& text) {
  RootVector out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed root coordinate '" + part + "'");
    }
    if (used != part.size()) throw DomainError("malformed root coordinate '" + part + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty root");
  return out;
}

std::string graph_file_stem(DynkinType t, const RootVector& mu) {
  std::string s = type_name(t) + "_";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "-" : "") + std::to_string(mu[i]);
  return s;
}

}  // namespace cluster::io
