#pragma once

#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/report.hpp"
#include "cluster/tilegraphs.hpp"

namespace cluster {

// Tiles T~_i carrying y_{i+1} north and y_{i-1} south.
//
// The signed lattice identifies y_{-i} = -y_i, y_1 = 1, y_{-1} = -1 and keeps y_0 symbolic
// (slots y0, y2, ..., y_max). The generic lattice has one independent variable per index.
class ExtendedLattice {
 public:
  static ExtendedLattice signed_lattice(int max_index);
  static ExtendedLattice generic(int lo, int hi);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_signed() const { return signed_; }

  Laurent y(int i) const;
  Tile tile(int i) const;
  // T~_from .. T~_to glued west to east; no tiles when to < from.
  TileGraph window(int from, int to) const;
  Laurent window_monomial(int from, int to) const;
  Laurent matching(int from, int to) const;
  // P(window) / monomial, then y_0 -> 0 on the signed lattice.
  Laurent expansion(int from, int to) const;
  // Sets y_0 = 0; throws PoleError if y_0 still divides a denominator.
  Laurent limit_y0(const Laurent& p) const;

 private:
  bool signed_ = false;
  int lo_ = 0, hi_ = 0;
  std::vector<std::string> names_;
};

// P(G0)P(G2) = P(G1^{i-1})P(G1^{i+1}) + excess over the window of half-width j centred at i.
enum class CondensationMode { Generic, Signed, Unit };
CheckResult check_condensation(int i, int j, CondensationMode mode);
Laurent condensation_excess(const ExtendedLattice& lat, int i, int j);

// Even: T~_{-j}..T~_{j+1} gives y_{j+2}. Odd: T~_{-j}..T~_{j+2} gives 1.
CheckResult check_center_one(int j, bool even);

// T~_{2-j}..T~_{j+k} against T~_{j+1}..T~_{j+k}.
CheckResult check_excision_a(int j, int k);

// B_n towers T_a..T_b with squares past rank n weighted by x_{n+1} = 1, x_{n+2} = z -> 0 and
// x_{n+2+k} = -x_{n+2-k}; returns P / tile monomial in x_1..x_n, z after z -> 0.
Laurent extended_b_tower(int n, int a, int b);
// T_a..T_b against T_a..T_{2n+1-b}; the note records whether T_a..T_{2n+2-b} also matches.
CheckResult check_excision_b(int n, int a, int b);
// Admissible pairs n+1 <= b <= 2n-(a-2), a >= 3.
std::vector<std::pair<int, int>> admissible_b_excisions(int n);

}  // namespace cluster
