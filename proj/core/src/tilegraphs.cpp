#include "cluster/tilegraphs.hpp"

#include <algorithm>
#include <sstream>

#include "cluster/errors.hpp"

namespace cluster {

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Square: return "square";
    case Shape::Hexagon: return "hexagon";
    case Shape::Trapezoid: return "trapezoid";
  }
  return "?";
}

namespace {

// x_label as a monomial, or 1 when the label has no slot.
Laurent weight_for_label(DynkinType t, int label) {
  int s = slot_of_label(t, label);
  if (s < 0) return Laurent::constant(t.rank, 1);
  return Laurent::variable(t.rank, s);
}

Laurent unit(DynkinType t) { return Laurent::constant(t.rank, 1); }

Tile square(DynkinType t, int slot, Laurent n, Laurent e, Laurent s, Laurent w) {
  return Tile{slot, slot_labels(t)[slot], Shape::Square, {n, e, s, w}, false};
}

// Numeric part of a label such as "1b".
int label_number(const std::string& label) {
  int v = 0;
  for (char c : label) {
    if (c < '0' || c > '9') break;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Label number carried by a weight x_k, or -1 for non-variable weights.
int weight_label(const TileGraph& g, const Laurent& w) {
  if (!w.is_monomial() || w.leading().second != 1) return -1;
  const auto& e = w.leading().first;
  int slot = -1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] != 1 || slot >= 0) return -1;
    slot = static_cast<int>(i);
  }
  if (slot < 0) return -1;
  std::string name = slot < static_cast<int>(g.var_names.size())
                         ? g.var_names[slot]
                         : "x" + std::to_string(slot + 1);
  if (!name.empty() && name[0] == 'x') name.erase(0, 1);
  return label_number(name);
}

}  // namespace

std::vector<Tile> tile_set(DynkinType t) {
  t = make_type(t.family, t.rank);
  const int n = t.rank;
  std::vector<Tile> out;
  auto x = [&](int label) { return weight_for_label(t, label); };
  const Laurent one = unit(t);

  switch (t.family) {
    case Family::A:
    case Family::C:
      for (int i = 1; i <= n; ++i) {
        if (t.family == Family::C && i == 1)
          out.push_back(square(t, 0, x(2), one, x(2), one));
        else
          out.push_back(square(t, i - 1, x(i + 1), one, x(i - 1), one));
      }
      break;
    case Family::B:
    case Family::D:
    case Family::G2: {
      const bool d = t.family == Family::D;
      const bool g2 = t.family == Family::G2;
      const int trapezoids = d ? 2 : 1;
      for (int s = 0; s < trapezoids; ++s)
        out.push_back(Tile{s, slot_labels(t)[s], Shape::Trapezoid, {x(2), one, one, one}, false});
      const int hex_slot = d ? 2 : 1;
      Laurent bottom = d ? Laurent::variable(t.rank, 1) : x(1);
      Laurent northwest = g2 ? x(1) : x(3);
      out.push_back(Tile{hex_slot, slot_labels(t)[hex_slot], Shape::Hexagon,
                         {one, x(1), one, bottom, one, northwest}, false});
      const int top = d ? n - 1 : n;
      for (int k = 3; k <= top; ++k)
        out.push_back(square(t, slot_of_label(t, k), one, x(k - 1), one, x(k + 1)));
      break;
    }
  }
  return out;
}

Tile rotated_half_turn(Tile tile) {
  const std::size_t k = tile.edges.size();
  std::vector<Laurent> e;
  for (std::size_t i = 0; i < k; ++i) e.push_back(tile.edges[(i + k / 2) % k]);
  tile.edges = std::move(e);
  tile.rotated = !tile.rotated;
  return tile;
}

std::string TileGraph::tile_word() const {
  std::string out;
  for (const auto& t : tiles) {
    if (!out.empty()) out += ' ';
    out += "T" + t.label;
  }
  return out;
}

TileGraph chain_graph(std::vector<Tile> tiles, int from_edge, int to_edge, std::size_t nvars,
                      std::vector<std::string> var_names) {
  TileGraph g;
  g.nvars = nvars;
  g.var_names = var_names.empty() ? default_names(nvars) : std::move(var_names);
  g.tiles = std::move(tiles);
  for (int k = 0; k + 1 < static_cast<int>(g.tiles.size()); ++k)
    g.gluings.push_back({k, from_edge, k + 1, to_edge, false, false});
  g.kind = "chain";
  return g;
}

bool obeys_rule_one(const TileGraph& g, const Gluing& gl) {
  const Tile& A = g.tiles.at(gl.a);
  const Tile& B = g.tiles.at(gl.b);
  if (gl.twisted) return false;
  const int ka = A.corners(), kb = B.corners();
  const Laurent& before_a = A.edges[(gl.ea + ka - 1) % ka];
  const Laurent& before_b = B.edges[(gl.eb + kb - 1) % kb];
  return weight_label(g, before_a) == label_number(B.label) &&
         weight_label(g, before_b) == label_number(A.label);
}

std::string to_dot(const MatchingGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.nvertices; ++v) {
    const std::string& vn = v < static_cast<int>(g.vertex_names.size()) ? g.vertex_names[v]
                                                                         : std::to_string(v);
    os << "  v" << v << " [label=\"" << vn << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << to_string(e.weight, g.var_names)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cluster
