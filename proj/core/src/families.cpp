#include <algorithm>

#include "cluster/errors.hpp"
#include "cluster/tilegraphs.hpp"

namespace cluster {

namespace {

// Corner names of the hexagon, clockwise from the top-left.
enum HexCorner { kA = 0, kB, kC, kD, kE, kF };

class Builder {
 public:
  Builder(DynkinType t, std::string kind) : t_(t), base_(tile_set(t)) {
    g_.nvars = static_cast<std::size_t>(t.rank);
    g_.var_names = variable_names(t);
    g_.kind = std::move(kind);
  }

  int add(const Tile& tile) {
    g_.tiles.push_back(tile);
    return static_cast<int>(g_.tiles.size()) - 1;
  }
  int add_label(int label) { return add(base_.at(index_of(slot_of_label(t_, label)))); }
  int add_slot(int slot) { return add(base_.at(index_of(slot))); }

  void glue(int a, int ea, int b, int eb, bool twisted = false, bool exempt = false) {
    g_.gluings.push_back({a, ea, b, eb, twisted, exempt});
  }

  int hexagon() { return add_label(2); }
  // Trapezoid whose eastern edge sits on the south-west edge of the hexagon.
  void west_trapezoid(int hex, int slot) { glue(add_slot(slot), 1, hex, 4); }
  // Trapezoid whose western edge sits on the south-east edge of the hexagon.
  void east_trapezoid(int hex, int slot) { glue(add_slot(slot), 3, hex, 2, false, true); }
  // Trapezoid joining the south-east edge of one hexagon to the south-west edge of another.
  void middle_trapezoid(int left, int right, int slot) {
    int m = add_slot(slot);
    glue(m, 3, left, 2, false, true);
    glue(m, 1, right, 4, true, true);
  }
  // Trapezoid whose eastern edge sits on the top edge of the hexagon.
  void top_trapezoid(int hex, int slot) { glue(add_slot(slot), 1, hex, 0); }

  // Squares T_from..T_to stacked northwards; the first one sits on `below` if given.
  void tower(int from, int to, int below = -1) {
    int prev = below;
    for (int k = from; k <= to; ++k) {
      int cur = add_label(k);
      if (prev >= 0) glue(cur, 2, prev, 0);
      prev = cur;
    }
  }

  void arc(int a, int ca, int b, int cb) { g_.arcs.push_back({a, ca, b, cb}); }

  TileGraph finish() {
    g_.mu.assign(t_.rank, 0);
    for (const auto& tile : g_.tiles) ++g_.mu.at(tile.slot);
    return std::move(g_);
  }

  DynkinType type() const { return t_; }

 private:
  int index_of(int slot) const {
    for (std::size_t i = 0; i < base_.size(); ++i)
      if (base_[i].slot == slot) return static_cast<int>(i);
    throw StructuralError("no tile for slot " + std::to_string(slot));
  }

  DynkinType t_;
  std::vector<Tile> base_;
  TileGraph g_;
};

std::vector<TileGraph> family_a_c(DynkinType t) {
  const int n = t.rank;
  std::vector<TileGraph> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Builder b(t, "interval");
      for (int k = i; k <= j; ++k) b.add_label(k);
      TileGraph g = b.finish();
      for (int k = 0; k + 1 < static_cast<int>(g.tiles.size()); ++k)
        g.gluings.push_back({k, 1, k + 1, 3, false, false});
      out.push_back(std::move(g));
    }
  }
  if (t.family != Family::C) return out;
  // T_i ... T_2 T_1 T_2 ... T_j, tiles left of T_1 turned by a half-turn.
  const auto base = tile_set(t);
  for (int i = 2; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Builder b(t, "folded-ladder");
      for (int k = i; k >= 2; --k) b.add(rotated_half_turn(base[k - 1]));
      for (int k = 1; k <= j; ++k) b.add_label(k);
      TileGraph g = b.finish();
      for (int k = 0; k + 1 < static_cast<int>(g.tiles.size()); ++k)
        g.gluings.push_back({k, 1, k + 1, 3, false, false});
      out.push_back(std::move(g));
    }
  }
  return out;
}

// B_n and D_n share one skeleton; `top` is the largest square label and
// `west`/`east` are the trapezoid slots used when one or two trapezoids appear.
std::vector<TileGraph> family_b_d(DynkinType t) {
  const bool d = t.family == Family::D;
  const int top = d ? t.rank - 1 : t.rank;
  std::vector<std::vector<int>> trapezoid_sets =
      d ? std::vector<std::vector<int>>{{}, {0}, {1}, {1, 0}}
        : std::vector<std::vector<int>>{{}, {0}, {0, 0}};
  std::vector<TileGraph> out;

  for (int s = 0; s < (d ? 2 : 1); ++s) {
    Builder b(t, "trapezoid");
    b.add_slot(s);
    out.push_back(b.finish());
  }
  for (int a = 3; a <= top; ++a) {
    for (int c = a; c <= top; ++c) {
      Builder b(t, "tower");
      b.tower(a, c);
      out.push_back(b.finish());
    }
  }
  for (int height = 2; height <= top; ++height) {
    for (const auto& traps : trapezoid_sets) {
      Builder b(t, traps.empty() ? "hexagon" : traps.size() == 1 ? "hexagon+W" : "hexagon+W+E");
      int hex = b.hexagon();
      b.tower(3, height, hex);
      if (!traps.empty()) b.west_trapezoid(hex, traps[0]);
      if (traps.size() == 2) b.east_trapezoid(hex, traps[1]);
      out.push_back(b.finish());
    }
  }
  // Two hexagons: squares up to c appear twice, up to tall once.
  for (int tall = 3; tall <= top; ++tall) {
    for (int c = 2; c < tall; ++c) {
      Builder b(t, "two-hexagon");
      int left = b.hexagon();
      int right = b.hexagon();
      const bool left_tall = c % 2 == 1;
      b.tower(3, left_tall ? tall : c, left);
      b.tower(3, left_tall ? c : tall, right);
      b.west_trapezoid(left, d ? 1 : 0);
      b.middle_trapezoid(left, right, 0);
      b.arc(left, kF, right, kD);
      out.push_back(b.finish());
    }
  }
  return out;
}

std::vector<TileGraph> family_g2(DynkinType t) {
  std::vector<TileGraph> out;
  {
    Builder b(t, "trapezoid");
    b.add_slot(0);
    out.push_back(b.finish());
  }
  for (int traps = 0; traps <= 3; ++traps) {
    Builder b(t, traps == 0 ? "hexagon" : "hexagon+" + std::to_string(traps));
    int hex = b.hexagon();
    if (traps >= 1) b.west_trapezoid(hex, 0);
    if (traps >= 2) b.east_trapezoid(hex, 0);
    if (traps >= 3) b.top_trapezoid(hex, 0);
    out.push_back(b.finish());
  }
  {
    Builder b(t, "two-hexagon");
    int left = b.hexagon();
    int right = b.hexagon();
    b.west_trapezoid(left, 0);
    b.middle_trapezoid(left, right, 0);
    b.east_trapezoid(right, 0);
    b.arc(left, kF, right, kD);
    out.push_back(b.finish());
  }
  return out;
}

}  // namespace

std::vector<TileGraph> enumerate_family(DynkinType t) {
  t = make_type(t.family, t.rank);
  std::vector<TileGraph> out;
  switch (t.family) {
    case Family::A:
    case Family::C: out = family_a_c(t); break;
    case Family::B:
    case Family::D: out = family_b_d(t); break;
    case Family::G2: out = family_g2(t); break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TileGraph& x, const TileGraph& y) { return x.mu < y.mu; });
  return out;
}

TileGraph graph_for_root(DynkinType t, const RootVector& alpha) {
  if (!is_positive_root(t, alpha)) throw BijectionError("not a positive root");
  for (auto& g : enumerate_family(t))
    if (g.mu == alpha) return g;
  throw BijectionError("no family graph has the requested multiplicity vector");
}

}  // namespace cluster
