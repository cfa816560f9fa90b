#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/types.hpp"

namespace cluster {

// b'_ij = -b_ij on row/column k, else b_ij + max(-b_ik,0) b_kj + b_ik max(b_kj,0). k is 0-based.
IntMatrix mutate_matrix(const IntMatrix& b, int k);

// Positive d with d_i b_ij = -d_j b_ji, normalized to gcd 1; nullopt if none exists.
std::optional<std::vector<int>> skew_symmetrizer(const IntMatrix& b);
bool is_bipartite(const IntMatrix& b);

struct Seed {
  std::vector<Laurent> cluster;
  IntMatrix matrix;
};

Seed initial_seed(DynkinType t);
// Binomial exchange using row k of the matrix (0-based k).
Seed mutate_seed(const Seed& s, int k);

struct BeltEntry {
  int col;  // 0-based slot
  int sup;  // superscript j of x_i^{(j)}; 0 for initial variables
  Laurent value;
};

// rows[0] holds the odd-label initial variables, rows[1] the even-label ones;
// each later row is one half-step of the belt.
struct BeltLattice {
  DynkinType type;
  std::vector<std::vector<BeltEntry>> rows;

  // Value at (slot, superscript), if present.
  const Laurent* at(int col, int sup) const;
};

// Mutated half-rows are capped at max_rows; extra_rows continue past coverage.
// Throws IncompletenessError if the cap is hit first.
BeltLattice belt(DynkinType t, int max_rows, int extra_rows = 0);
int default_belt_cap(DynkinType t);

// Keyed by denominator vector; one entry per positive root.
std::map<RootVector, Laurent> noninitial_variables(DynkinType t);
std::map<RootVector, Laurent> noninitial_variables(const BeltLattice& lattice);

}  // namespace cluster
