#include <map>
#include <numeric>
#include <set>

#include "cluster/errors.hpp"
#include "cluster/tilegraphs.hpp"

namespace cluster {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

MatchingGraph realize(const TileGraph& g) {
  const int ntiles = static_cast<int>(g.tiles.size());
  std::vector<int> offset(ntiles + 1, 0);
  for (int t = 0; t < ntiles; ++t) {
    const Tile& tile = g.tiles[t];
    if (tile.corners() < 3) throw StructuralError("tile with fewer than three edges");
    for (const auto& w : tile.edges)
      if (w.nvars() != g.nvars) throw StructuralError("tile weight ambient mismatch");
    offset[t + 1] = offset[t] + tile.corners();
  }
  auto corner = [&](int t, int c) {
    if (t < 0 || t >= ntiles) throw StructuralError("gluing references a missing tile");
    const int k = g.tiles[t].corners();
    if (c < 0 || c >= k) throw StructuralError("gluing references a missing edge or corner");
    return offset[t] + c;
  };

  UnionFind uf(offset[ntiles]);
  std::set<std::pair<int, int>> absorbed;  // (tile, edge) merged into an earlier edge
  for (const Gluing& gl : g.gluings) {
    if (gl.a < 0 || gl.b < 0 || gl.a >= ntiles || gl.b >= ntiles)
      throw StructuralError("gluing refers to a missing tile");
    if (gl.a == gl.b) throw StructuralError("tile glued to itself");
    const int ka = g.tiles[gl.a].corners(), kb = g.tiles[gl.b].corners();
    if (gl.ea < 0 || gl.eb < 0 || gl.ea >= ka || gl.eb >= kb)
      throw StructuralError("gluing refers to a missing edge");
    const int a0 = corner(gl.a, gl.ea), a1 = corner(gl.a, (gl.ea + 1) % ka);
    const int b0 = corner(gl.b, gl.eb), b1 = corner(gl.b, (gl.eb + 1) % kb);
    if (!(g.tiles[gl.a].edges[gl.ea] == g.tiles[gl.b].edges[gl.eb]))
      throw StructuralError("glued edges carry different weights");
    if (!absorbed.insert({gl.b, gl.eb}).second || absorbed.count({gl.a, gl.ea}))
      throw StructuralError("edge glued twice");
    if (gl.twisted) {
      uf.unite(a0, b0);
      uf.unite(a1, b1);
    } else {
      uf.unite(a0, b1);
      uf.unite(a1, b0);
    }
  }

  MatchingGraph m;
  m.nvars = g.nvars;
  m.var_names = g.var_names.empty() ? default_names(g.nvars) : g.var_names;
  std::map<int, int> vertex_of_root;
  for (int t = 0; t < ntiles; ++t) {
    for (int c = 0; c < g.tiles[t].corners(); ++c) {
      int r = uf.find(corner(t, c));
      if (vertex_of_root.emplace(r, m.nvertices).second) {
        m.vertex_names.push_back("t" + std::to_string(t) + "c" + std::to_string(c));
        ++m.nvertices;
      }
    }
  }
  auto vid = [&](int t, int c) { return vertex_of_root.at(uf.find(corner(t, c))); };

  for (int t = 0; t < ntiles; ++t) {
    const Tile& tile = g.tiles[t];
    for (int e = 0; e < tile.corners(); ++e) {
      if (absorbed.count({t, e})) continue;
      int u = vid(t, e), v = vid(t, (e + 1) % tile.corners());
      if (u == v) throw StructuralError("gluing collapses an edge to a loop");
      m.edges.push_back({std::min(u, v), std::max(u, v), tile.edges[e],
                         "T" + tile.label + "#" + std::to_string(t) + " edge " + std::to_string(e)});
    }
  }
  for (const Arc& a : g.arcs) {
    if (a.a < 0 || a.b < 0 || a.a >= ntiles || a.b >= ntiles || a.ca < 0 || a.cb < 0 ||
        a.ca >= g.tiles[a.a].corners() || a.cb >= g.tiles[a.b].corners())
      throw StructuralError("arc refers to a missing corner");
    int u = vid(a.a, a.ca), v = vid(a.b, a.cb);
    if (u == v) throw StructuralError("arc endpoints coincide");
    m.edges.push_back({std::min(u, v), std::max(u, v), Laurent::constant(g.nvars, 1), "arc"});
  }
  return m;
}

}  // namespace cluster
