#include <doctest.h>

#include <random>

#include "cluster/errors.hpp"
#include "cluster/mutation.hpp"
#include "cluster/rootsys.hpp"

using namespace cluster;

namespace {

Laurent P(DynkinType t, const char* s) { return parse(s, t.rank, variable_names(t)); }

const DynkinType A2 = make_type(Family::A, 2);
const DynkinType A3 = make_type(Family::A, 3);
const DynkinType B2 = make_type(Family::B, 2);
const DynkinType C2 = make_type(Family::C, 2);

}  // namespace

TEST_SUITE("mutation") {
  TEST_CASE("matrix mutation examples") {
    CHECK(mutate_matrix({{0, 1}, {-1, 0}}, 0) == IntMatrix{{0, -1}, {1, 0}});
    IntMatrix b = exchange_matrix(A3);
    IntMatrix neg = b;
    for (auto& row : neg)
      for (auto& v : row) v = -v;
    CHECK(mutate_matrix(b, 1) == neg);
  }

  TEST_CASE("initial seeds") {
    CHECK(initial_seed(make_type(Family::G2, 2)).matrix == IntMatrix{{0, 1}, {-3, 0}});
    CHECK(initial_seed(A2).matrix == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(initial_seed(make_type(Family::D, 4)).matrix ==
          IntMatrix{{0, 0, 1, 0}, {0, 0, 1, 0}, {-1, -1, 0, -1}, {0, 0, 1, 0}});
    for (auto t : desk_scale_types()) {
      CHECK(is_bipartite(exchange_matrix(t)));
      CHECK(skew_symmetrizer(exchange_matrix(t)).has_value());
    }
  }

  TEST_CASE("random skew-symmetrizable matrices: involution and symmetrizer") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 5)(rng);
      std::vector<int> d(n);
      for (auto& v : d) v = std::uniform_int_distribution<int>(1, 3)(rng);
      // b_ij = s_ij d_j with s skew-symmetric gives d_i b_ij = -d_j b_ji
      IntMatrix b(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int s = std::uniform_int_distribution<int>(-2, 2)(rng);
          b[i][j] = s * d[j];
          b[j][i] = -s * d[i];
        }
      auto sym = skew_symmetrizer(b);
      REQUIRE(sym.has_value());
      for (int k = 0; k < n; ++k) {
        IntMatrix m = mutate_matrix(b, k);
        CHECK(mutate_matrix(m, k) == b);
        auto ms = skew_symmetrizer(m);
        REQUIRE(ms.has_value());
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) CHECK((*sym)[i] * m[i][j] == -(*sym)[j] * m[j][i]);
      }
    }
  }

  TEST_CASE("seed mutation examples") {
    Seed s = mutate_seed(initial_seed(A2), 0);
    CHECK(s.cluster[0] == div_exact(P(A2, "x2 + 1"), P(A2, "x1")));
    Seed t = mutate_seed(initial_seed(B2), 1);
    CHECK(t.cluster[1] == div_exact(P(B2, "x1^2 + 1"), P(B2, "x2")));
    for (auto type : desk_scale_types()) {
      Seed init = initial_seed(type);
      for (int k = 0; k < type.rank; ++k) {
        Seed back = mutate_seed(mutate_seed(init, k), k);
        CHECK(back.cluster == init.cluster);
        CHECK(back.matrix == init.matrix);
      }
    }
  }

  TEST_CASE("belt examples") {
    BeltLattice a2 = belt(A2, default_belt_cap(A2), 2);
    CHECK(*a2.at(0, 1) == div_exact(P(A2, "x2 + 1"), P(A2, "x1")));
    CHECK(*a2.at(1, 2) == div_exact(P(A2, "x1 + x2 + 1"), P(A2, "x1*x2")));
    CHECK(*a2.at(0, 3) == div_exact(P(A2, "x1 + 1"), P(A2, "x2")));
    CHECK(*a2.at(1, 4) == P(A2, "x1"));

    BeltLattice a3 = belt(A3, default_belt_cap(A3));
    CHECK(*a3.at(1, 2) == div_exact(P(A3, "x2^2 + 2*x2 + x1*x3 + 1"), P(A3, "x1*x2*x3")));

    BeltLattice b2 = belt(B2, default_belt_cap(B2));
    CHECK(*b2.at(1, 2) == div_exact(P(B2, "(x2 + 1)^2 + x1^2"), P(B2, "x1^2*x2")));
  }

  TEST_CASE("noninitial variables") {
    auto a2 = noninitial_variables(A2);
    REQUIRE(a2.size() == 3);
    CHECK(a2.at({1, 0}) == div_exact(P(A2, "x2 + 1"), P(A2, "x1")));
    CHECK(a2.at({0, 1}) == div_exact(P(A2, "x1 + 1"), P(A2, "x2")));
    CHECK(a2.at({1, 1}) == div_exact(P(A2, "x1 + x2 + 1"), P(A2, "x1*x2")));
    CHECK(noninitial_variables(make_type(Family::G2, 2)).size() == 6);
    auto c2 = noninitial_variables(C2);
    CHECK(c2.at({1, 2}) == div_exact(P(C2, "x2^2 + (x1 + 1)^2"), P(C2, "x1*x2^2")));
    for (auto t : desk_scale_types()) {
      auto vars = noninitial_variables(t);
      auto roots = positive_roots(t);
      REQUIRE(vars.size() == roots.size());
      for (const auto& r : roots) CHECK(vars.count(r) == 1);
    }
  }

  TEST_CASE("A_n belt periodicity") {
    for (int n = 2; n <= 7; ++n) {
      DynkinType t = make_type(Family::A, n);
      BeltLattice lat = belt(t, default_belt_cap(t), 4);
      for (int col = 0; col < n; ++col)
        for (int sup : {n + 2, n + 3}) {
          const Laurent* v = lat.at(col, sup);
          if (!v) continue;
          CHECK_MESSAGE(*v == Laurent::variable(n, static_cast<std::size_t>(n - 1 - col)),
                        type_name(t), " col ", col, " sup ", sup);
        }
    }
  }

  TEST_CASE("mutations inside a half-row commute") {
    for (auto t : desk_scale_types()) {
      Seed fwd = initial_seed(t), rev = initial_seed(t);
      std::vector<int> odd;
      for (int k = 0; k < t.rank; ++k)
        if (slot_number(t, k) % 2 == 1) odd.push_back(k);
      for (int k : odd) fwd = mutate_seed(fwd, k);
      for (auto it = odd.rbegin(); it != odd.rend(); ++it) rev = mutate_seed(rev, *it);
      CHECK(fwd.cluster == rev.cluster);
      CHECK(fwd.matrix == rev.matrix);
    }
  }

  TEST_CASE("capped belt") {
    CHECK_THROWS_AS(belt(make_type(Family::A, 5), 2), IncompletenessError);
    CHECK_NOTHROW(belt(make_type(Family::A, 5), default_belt_cap(make_type(Family::A, 5))));
  }
}
