#include "cluster/extended.hpp"

#include <cstdlib>

#include "cluster/errors.hpp"
#include "cluster/matchenum.hpp"

namespace cluster {

namespace {

std::string y_name(int i) { return i < 0 ? "ym" + std::to_string(-i) : "y" + std::to_string(i); }

std::string window_text(int from, int to) {
  if (to < from) return "(empty)";
  return "T~" + std::to_string(from) + "..T~" + std::to_string(to);
}

void fail(CheckResult& r, std::vector<std::pair<std::string, std::string>> payload) {
  r.pass = false;
  r.counterexample = std::move(payload);
}

}  // namespace

ExtendedLattice ExtendedLattice::signed_lattice(int max_index) {
  ExtendedLattice lat;
  lat.signed_ = true;
  lat.lo_ = -max_index;
  lat.hi_ = max_index;
  lat.names_.push_back("y0");
  for (int k = 2; k <= max_index; ++k) lat.names_.push_back(y_name(k));
  return lat;
}

ExtendedLattice ExtendedLattice::generic(int lo, int hi) {
  ExtendedLattice lat;
  lat.lo_ = lo;
  lat.hi_ = hi;
  for (int k = lo; k <= hi; ++k) lat.names_.push_back(y_name(k));
  return lat;
}

Laurent ExtendedLattice::y(int i) const {
  if (i < lo_ || i > hi_) throw DomainError("y index " + std::to_string(i) + " outside lattice");
  const std::size_t n = nvars();
  if (!signed_) return Laurent::variable(n, static_cast<std::size_t>(i - lo_));
  if (i == 0) return Laurent::variable(n, 0);
  if (i == 1) return Laurent::constant(n, 1);
  if (i < 0) return -y(-i);
  return Laurent::variable(n, static_cast<std::size_t>(i - 1));
}

Tile ExtendedLattice::tile(int i) const {
  const Laurent one = Laurent::constant(nvars(), 1);
  return Tile{-1, "~" + std::to_string(i), Shape::Square, {y(i + 1), one, y(i - 1), one}, false};
}

TileGraph ExtendedLattice::window(int from, int to) const {
  std::vector<Tile> tiles;
  for (int i = from; i <= to; ++i) tiles.push_back(tile(i));
  TileGraph g = chain_graph(std::move(tiles), 1, 3, nvars(), names_);
  g.kind = "extended-window";
  return g;
}

Laurent ExtendedLattice::window_monomial(int from, int to) const {
  Laurent m = Laurent::constant(nvars(), 1);
  for (int i = from; i <= to; ++i) m *= y(i);
  return m;
}

Laurent ExtendedLattice::matching(int from, int to) const {
  return matching_polynomial(realize(window(from, to)));
}

Laurent ExtendedLattice::limit_y0(const Laurent& p) const {
  if (!signed_) return p;
  return substitute(p, {{0, Laurent::constant(nvars(), 0)}});
}

Laurent ExtendedLattice::expansion(int from, int to) const {
  return limit_y0(div_exact(matching(from, to), window_monomial(from, to)));
}

Laurent condensation_excess(const ExtendedLattice& lat, int i, int j) {
  Laurent e = lat.window_monomial(i - j + 1, i + j - 1);
  const int a = i - j + 3, b = i + j - 3;
  if (b >= a - 1) return e * lat.window_monomial(a, b);
  // A reversed range contributes the reciprocal of the skipped indices.
  return div_exact(e, lat.window_monomial(b + 1, a - 1));
}

CheckResult check_condensation(int i, int j, CondensationMode mode) {
  CheckResult r;
  const char* tag = mode == CondensationMode::Generic  ? "generic"
                    : mode == CondensationMode::Signed ? "signed"
                                                       : "unit";
  r.name = "condensation[" + std::string(tag) + ",i=" + std::to_string(i) + ",j=" +
           std::to_string(j) + "]";
  if (j < 2) {
    fail(r, {{"reason", "half-width must be at least 2"}});
    return r;
  }
  const ExtendedLattice lat = mode == CondensationMode::Signed
                                  ? ExtendedLattice::signed_lattice(std::abs(i) + j + 1)
                                  : ExtendedLattice::generic(i - j, i + j);
  Laurent g0 = lat.matching(i - j + 1, i + j - 1);
  Laurent g2 = lat.matching(i - j + 3, i + j - 3);
  Laurent gm = lat.matching(i - j + 1, i + j - 3);
  Laurent gp = lat.matching(i - j + 3, i + j - 1);
  Laurent excess = condensation_excess(lat, i, j);
  Laurent lhs = g0 * g2;
  Laurent rhs = gm * gp + excess;
  if (mode == CondensationMode::Unit) {
    std::map<std::size_t, Laurent> ones;
    for (std::size_t s = 0; s < lat.nvars(); ++s) ones.emplace(s, Laurent::constant(0, 1));
    auto eval = [&](const Laurent& p) { return to_string(substitute(p, ones, 0)); };
    r.summary = eval(g0) + "*" + eval(g2) + " = " + eval(gm) + "*" + eval(gp) + " + " +
                eval(excess);
    lhs = substitute(lhs, ones, 0);
    rhs = substitute(rhs, ones, 0);
  } else {
    r.summary = std::to_string(g0.size()) + "-term identity";
  }
  if (!(lhs == rhs))
    fail(r, {{"lhs", to_string(lhs, lat.names())},
             {"rhs", to_string(rhs, lat.names())},
             {"difference", to_string(lhs - rhs, lat.names())}});
  return r;
}

CheckResult check_center_one(int j, bool even) {
  CheckResult r;
  r.name = std::string("center-one[") + (even ? "even" : "odd") + ",j=" + std::to_string(j) + "]";
  if (j < 0) {
    fail(r, {{"reason", "j must be nonnegative"}});
    return r;
  }
  const ExtendedLattice lat = ExtendedLattice::signed_lattice(j + 3);
  const int from = -j, to = even ? j + 1 : j + 2;
  const Laurent expected = even ? lat.y(j + 2) : Laurent::constant(lat.nvars(), 1);
  try {
    Laurent got = lat.expansion(from, to);
    r.summary = window_text(from, to) + " -> " + to_fraction_string(got, lat.names());
    if (!(got == expected))
      fail(r, {{"window", window_text(from, to)},
               {"expected", to_fraction_string(expected, lat.names())},
               {"got", to_fraction_string(got, lat.names())}});
  } catch (const PoleError& e) {
    fail(r, {{"window", window_text(from, to)}, {"error", e.what()}});
  }
  return r;
}

CheckResult check_excision_a(int j, int k) {
  CheckResult r;
  r.name = "excision-a[j=" + std::to_string(j) + ",k=" + std::to_string(k) + "]";
  const ExtendedLattice lat = ExtendedLattice::signed_lattice(j + k + 1);
  try {
    Laurent big = lat.expansion(2 - j, j + k);
    Laurent small = lat.expansion(j + 1, j + k);
    r.summary = window_text(2 - j, j + k) + " ~ " + window_text(j + 1, j + k) + " = " +
                to_fraction_string(small, lat.names());
    if (!(big == small))
      fail(r, {{"graph", window_text(2 - j, j + k)},
               {"excised", window_text(j + 1, j + k)},
               {"graph_value", to_fraction_string(big, lat.names())},
               {"excised_value", to_fraction_string(small, lat.names())}});
  } catch (const PoleError& e) {
    fail(r, {{"error", e.what()}});
  }
  return r;
}

Laurent extended_b_tower(int n, int a, int b) {
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  const std::size_t z = static_cast<std::size_t>(n);
  auto x = [&](auto&& self, int m) -> Laurent {
    if (m >= 1 && m <= n) return Laurent::variable(nv, static_cast<std::size_t>(m - 1));
    if (m == n + 2) return Laurent::variable(nv, z);
    if (m > n + 2) return -self(self, 2 * (n + 2) - m);
    return Laurent::constant(nv, 1);
  };
  auto X = [&](int m) { return x(x, m); };
  std::vector<std::string> names = default_names(static_cast<std::size_t>(n));
  names.push_back("z");
  std::vector<Tile> tiles;
  Laurent mono = Laurent::constant(nv, 1);
  const Laurent one = Laurent::constant(nv, 1);
  for (int m = a; m <= b; ++m) {
    tiles.push_back(Tile{-1, std::to_string(m), Shape::Square, {one, X(m - 1), one, X(m + 1)}, false});
    mono *= X(m);
  }
  TileGraph g = chain_graph(std::move(tiles), 0, 2, nv, names);
  Laurent p = matching_polynomial(realize(g));
  return substitute(div_exact(p, mono), {{z, Laurent::constant(nv, 0)}});
}

std::vector<std::pair<int, int>> admissible_b_excisions(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 3; a <= n; ++a)
    for (int b = n + 1; b <= 2 * n - (a - 2); ++b) out.emplace_back(a, b);
  return out;
}

CheckResult check_excision_b(int n, int a, int b) {
  CheckResult r;
  r.name = "excision-b[n=" + std::to_string(n) + ",a=" + std::to_string(a) + ",b=" +
           std::to_string(b) + "]";
  std::vector<std::string> names = default_names(static_cast<std::size_t>(n));
  names.push_back("z");
  auto tower = [](int lo, int hi) {
    return hi < lo ? std::string("(empty)")
                   : "T" + std::to_string(lo) + "..T" + std::to_string(hi);
  };
  try {
    Laurent lhs = extended_b_tower(n, a, b);
    Laurent rhs = extended_b_tower(n, a, 2 * n + 1 - b);
    Laurent literal = extended_b_tower(n, a, 2 * n + 2 - b);
    r.summary = tower(a, b) + " ~ " + tower(a, 2 * n + 1 - b) + " = " +
                to_fraction_string(lhs, names);
    r.notes.push_back({"reflection " + tower(a, 2 * n + 2 - b),
                       lhs == literal ? "agrees" : "differs"});
    if (!(lhs == rhs))
      fail(r, {{"graph", tower(a, b)},
               {"graph_value", to_fraction_string(lhs, names)},
               {"reflected", tower(a, 2 * n + 1 - b)},
               {"reflected_value", to_fraction_string(rhs, names)}});
  } catch (const PoleError& e) {
    fail(r, {{"error", e.what()}});
  }
  return r;
}

}  // namespace cluster
