#include <doctest.h>

#include <set>

#include "cluster/errors.hpp"
#include "cluster/matchenum.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/tilegraphs.hpp"

using namespace cluster;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Height of the square tower resting on tile `base`, following north gluings.
int tower_top(const TileGraph& g, int base) {
  int top = 2, cur = base;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& gl : g.gluings)
      if (gl.b == cur && gl.eb == 0 && gl.ea == 2 && g.tiles[gl.a].shape == Shape::Square) {
        cur = gl.a;
        top = std::stoi(g.tiles[cur].label);
        moved = true;
        break;
      }
  }
  return top;
}

}  // namespace

TEST_SUITE("tilegraphs") {
  TEST_CASE("tile sets") {
    DynkinType a5 = make_type(Family::A, 5);
    Tile t1 = tile_set(a5)[0];
    CHECK(t1.shape == Shape::Square);
    CHECK(to_string(t1.edges[0], variable_names(a5)) == "x2");
    for (int e = 1; e < 4; ++e) CHECK(t1.edges[e].is_constant());

    DynkinType c3 = make_type(Family::C, 3);
    Tile c1 = tile_set(c3)[0];
    CHECK(c1.edges[0] == Laurent::variable(3, 1));
    CHECK(c1.edges[2] == Laurent::variable(3, 1));

    DynkinType b4 = make_type(Family::B, 4);
    Tile hex = tile_set(b4)[1];
    CHECK(hex.shape == Shape::Hexagon);
    std::vector<std::string> w;
    for (const auto& e : hex.edges) w.push_back(to_string(e, variable_names(b4)));
    CHECK(w == std::vector<std::string>{"1", "x1", "1", "x1", "1", "x3"});

    CHECK(tile_set(make_type(Family::D, 5)).size() == 5);
    Tile r = rotated_half_turn(tile_set(a5)[2]);
    CHECK(r.rotated);
    CHECK(r.edges[0] == tile_set(a5)[2].edges[2]);
  }

  TEST_CASE("family sizes and the root bijection") {
    CHECK(enumerate_family(make_type(Family::A, 5)).size() == 15);
    CHECK(enumerate_family(make_type(Family::C, 3)).size() == 9);
    CHECK(enumerate_family(make_type(Family::G2, 2)).size() == 6);
    for (auto t : desk_scale_types()) {
      auto fam = enumerate_family(t);
      std::set<RootVector> mus;
      for (const auto& g : fam) mus.insert(g.mu);
      auto roots = positive_roots(t);
      CHECK_MESSAGE(mus.size() == fam.size(), type_name(t));
      CHECK(mus == std::set<RootVector>(roots.begin(), roots.end()));
      for (const auto& r : roots) CHECK(graph_for_root(t, r).mu == r);
    }
  }

  TEST_CASE("graph_for_root examples") {
    CHECK(graph_for_root(make_type(Family::A, 5), {0, 1, 1, 1, 0}).tile_word() == "T2 T3 T4");
    CHECK(graph_for_root(make_type(Family::A, 3), {1, 0, 0}).tile_word() == "T1");
    CHECK(graph_for_root(make_type(Family::C, 3), {1, 2, 1}).tile_word() == "T2 T1 T2 T3");
    CHECK_THROWS_AS(graph_for_root(make_type(Family::A, 3), {1, 0, 1}), BijectionError);
  }

  TEST_CASE("realization shapes") {
    DynkinType a5 = make_type(Family::A, 5);
    MatchingGraph sq = realize(graph_for_root(a5, {0, 0, 1, 0, 0}));
    CHECK(sq.nvertices == 4);
    CHECK(sq.edges.size() == 4);
    CHECK(matching_polynomial(sq) == parse("x2*x4 + 1", 5));

    DynkinType b3 = make_type(Family::B, 3);
    MatchingGraph hex = realize(graph_for_root(b3, {0, 1, 0}));
    CHECK(hex.nvertices == 6);
    CHECK(hex.edges.size() == 6);
    CHECK(perfect_matchings(hex).size() == 2);
    CHECK(matching_polynomial(hex) == parse("x1^2*x3 + 1", 3));

    DynkinType a3 = make_type(Family::A, 3);
    MatchingGraph grid = realize(graph_for_root(a3, {1, 1, 1}));
    CHECK(grid.nvertices == 8);
    CHECK(grid.edges.size() == 10);
  }

  TEST_CASE("malformed gluings") {
    DynkinType a3 = make_type(Family::A, 3);
    TileGraph g = graph_for_root(a3, {1, 1, 0});
    TileGraph twice = g;
    twice.gluings.push_back(twice.gluings.front());
    CHECK_THROWS_AS(realize(twice), StructuralError);
    TileGraph bad = g;
    bad.gluings.front().eb = 0;  // x1 edge against unit edge
    CHECK_THROWS_AS(realize(bad), StructuralError);
    TileGraph range = g;
    range.gluings.front().b = 7;
    CHECK_THROWS_AS(realize(range), StructuralError);
  }

  TEST_CASE("dot output") {
    DynkinType a5 = make_type(Family::A, 5);
    std::string one = to_dot(realize(graph_for_root(a5, {0, 0, 1, 0, 0})));
    CHECK(count(one, "[label=\"t") == 4);
    CHECK(count(one, " -- ") == 4);
    MatchingGraph empty;
    std::string e = to_dot(empty);
    CHECK(e.find("graph G {") != std::string::npos);
    CHECK(count(e, " -- ") == 0);
    std::string grid = to_dot(realize(graph_for_root(make_type(Family::A, 3), {1, 1, 1})));
    CHECK(count(grid, "[label=\"t") == 8);
    CHECK(count(grid, " -- ") == 10);
    CHECK(count(grid, "label=\"x2\"") == 2);
  }

  TEST_CASE("clockwise rule and edge weights") {
    for (auto t : desk_scale_types()) {
      for (const auto& g : enumerate_family(t)) {
        for (const auto& gl : g.gluings)
          if (!gl.exempt) CHECK_MESSAGE(obeys_rule_one(g, gl), type_name(t), " ", g.tile_word());
        for (const auto& e : realize(g).edges) {
          bool ok = e.weight == Laurent::constant(g.nvars, 1);
          for (std::size_t v = 0; v < g.nvars; ++v) ok = ok || e.weight == Laurent::variable(g.nvars, v);
          CHECK(ok);
        }
      }
    }
  }

  TEST_CASE("two-hexagon towers") {
    for (auto t : desk_scale_types()) {
      if (t.family != Family::B && t.family != Family::D) continue;
      for (const auto& g : enumerate_family(t)) {
        if (g.kind != "two-hexagon") continue;
        REQUIRE(g.tiles[0].shape == Shape::Hexagon);
        REQUIRE(g.tiles[1].shape == Shape::Hexagon);
        const int left = tower_top(g, 0), right = tower_top(g, 1);
        CHECK(left != right);
        const int shorter = std::min(left, right);
        CHECK((left > right) == (shorter % 2 == 1));
        CHECK(g.arcs.size() == 1);
      }
    }
  }
}
