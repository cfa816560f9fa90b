#include <doctest.h>

#include <set>

#include "cluster/errors.hpp"
#include "cluster/rootsys.hpp"

using namespace cluster;

TEST_SUITE("rootsys") {
  TEST_CASE("small root systems") {
    CHECK(positive_roots(make_type(Family::A, 2)) == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(positive_roots(make_type(Family::B, 2)) ==
          std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}, {2, 1}});
    CHECK(positive_roots(make_type(Family::C, 2)) ==
          std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(positive_roots(make_type(Family::G2, 2)).size() == 6);
  }

  TEST_CASE("counts across the supported ranges") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      const int lo = f == Family::A ? 1 : f == Family::D ? 4 : 2;
      for (int n = lo; n <= std::min(max_rank(f), 10); ++n) {
        DynkinType t = make_type(f, n);
        auto roots = positive_roots(t);
        std::size_t want = f == Family::A ? std::size_t(n * (n + 1) / 2)
                           : f == Family::D ? std::size_t(n * (n - 1))
                                            : std::size_t(n * n);
        CHECK_MESSAGE(roots.size() == want, type_name(t));
        CHECK(expected_root_count(t) == want);
        CHECK(std::set<RootVector>(roots.begin(), roots.end()).size() == roots.size());
        for (const auto& r : roots) {
          CHECK(is_positive_root(t, r));
          for (int c : r) CHECK(c >= 0);
        }
      }
    }
  }

  TEST_CASE("highest roots") {
    auto top = [](DynkinType t) { return positive_roots(t); };
    auto has = [&](DynkinType t, RootVector r) {
      auto v = top(t);
      return std::find(v.begin(), v.end(), r) != v.end();
    };
    CHECK(has(make_type(Family::B, 4), {2, 2, 2, 1}));
    CHECK(has(make_type(Family::C, 4), {1, 2, 2, 2}));
    CHECK(has(make_type(Family::G2, 2), {3, 2}));
    // D_5 slots 1, 1b, 2, 3, 4
    CHECK(has(make_type(Family::D, 5), {1, 1, 2, 2, 1}));
    CHECK_FALSE(is_positive_root(make_type(Family::A, 3), {1, 0, 1}));
  }

  TEST_CASE("cartan matrix") {
    CartanSpec g = cartan(make_type(Family::G2, 2));
    CHECK(g.a == IntMatrix{{2, -1}, {-3, 2}});
    CartanSpec b = cartan(make_type(Family::B, 3));
    for (int i = 0; i < 3; ++i) CHECK(b.a[i][i] == 2);
  }

  TEST_CASE("unsupported types") {
    CHECK_THROWS_AS(make_type(Family::D, 3), DomainError);
    CHECK_THROWS_AS(make_type(Family::G2, 3), DomainError);
    CHECK_THROWS_AS(make_type(Family::A, 0), DomainError);
    CHECK_THROWS_AS(parse_type("E", 6), DomainError);
    CHECK(parse_type("G", 2) == make_type(Family::G2, 2));
  }
}
