#pragma once

#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/types.hpp"

namespace cluster {

enum class Shape { Square, Hexagon, Trapezoid };

std::string shape_name(Shape s);

// A weighted cycle. Corner e and corner e+1 bound edge e; edges run clockwise,
// starting with the northern (top) edge.
struct Tile {
  int slot = -1;      // multiplicity slot, -1 for tiles outside a root system
  std::string label;  // "1", "1b", "3", ...
  Shape shape = Shape::Square;
  std::vector<Laurent> edges;
  bool rotated = false;  // placed turned by a half-turn

  int corners() const { return static_cast<int>(edges.size()); }
};

// Identifies edge ea of tile a with edge eb of tile b. The default orientation matches
// corner ea with corner eb+1 (the two tiles lie on opposite sides); a twisted gluing
// matches corner ea with corner eb.
struct Gluing {
  int a = 0, ea = 0, b = 0, eb = 0;
  bool twisted = false;
  bool exempt = false;  // a documented exception to the clockwise labelling rule
};

// Extra unit-weight edge between two tile corners.
struct Arc {
  int a = 0, ca = 0, b = 0, cb = 0;
};

struct TileGraph {
  std::size_t nvars = 0;
  std::vector<std::string> var_names;
  std::vector<Tile> tiles;
  std::vector<Gluing> gluings;
  std::vector<Arc> arcs;
  RootVector mu;
  std::string kind;

  std::string tile_word() const;  // e.g. "T2 T1 T2 T3"
};

struct MatchingEdge {
  int u = 0, v = 0;
  Laurent weight;
  std::string note;
};

struct MatchingGraph {
  int nvertices = 0;
  std::size_t nvars = 0;
  std::vector<std::string> var_names;
  std::vector<std::string> vertex_names;
  std::vector<MatchingEdge> edges;
};

// One tile per slot (rank tiles, or rank with T1b for D_n), unrotated.
std::vector<Tile> tile_set(DynkinType t);
Tile rotated_half_turn(Tile tile);

// Family members ordered by multiplicity vector.
std::vector<TileGraph> enumerate_family(DynkinType t);
TileGraph graph_for_root(DynkinType t, const RootVector& alpha);

// Consecutive tiles glued with (tile k, edge from) ~ (tile k+1, edge to).
TileGraph chain_graph(std::vector<Tile> tiles, int from_edge, int to_edge, std::size_t nvars,
                      std::vector<std::string> var_names = {});

MatchingGraph realize(const TileGraph& g);

// Whether a gluing places each tile clockwise from an edge carrying the other tile's label.
// Labels 1 and 1b are treated as the same label.
bool obeys_rule_one(const TileGraph& g, const Gluing& gl);

std::string to_dot(const MatchingGraph& g, const std::string& name = "G");

}  // namespace cluster
