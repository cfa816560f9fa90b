#pragma once

#include <vector>

#include "cluster/types.hpp"

namespace cluster {

using RootVector = std::vector<int>;

struct CartanSpec {
  DynkinType type;
  IntMatrix a;
};

// a_ii = 2, a_ij = -|b_ij| from the initial exchange matrix.
CartanSpec cartan(DynkinType t);

// Reflection closure of the simple roots, sorted lexicographically.
// The reflection s_j sends alpha to alpha - (sum_i alpha_i a_ij) e_j.
std::vector<RootVector> positive_roots(const CartanSpec& spec);
std::vector<RootVector> positive_roots(DynkinType t);

std::size_t expected_root_count(DynkinType t);

bool is_positive_root(DynkinType t, const RootVector& alpha);

}  // namespace cluster
