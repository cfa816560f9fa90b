#pragma once

#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/tilegraphs.hpp"
#include "cluster/types.hpp"

namespace cluster {

// Sum over perfect matchings of the product of edge weights, by recursive elimination of
// the lowest uncovered vertex with memoization on the uncovered set. At most 64 vertices.
Laurent matching_polynomial(const MatchingGraph& g);

// Same polynomial by a forward sweep over vertices whose state is the set of later
// vertices already matched.
Laurent matching_polynomial_transfer(const MatchingGraph& g);

// Every perfect matching as a list of edge indices; intended for small graphs.
std::vector<std::vector<int>> perfect_matchings(const MatchingGraph& g);

// P(G_alpha) / x^alpha.
Laurent cluster_expansion(DynkinType t, const RootVector& alpha);
Laurent cluster_expansion(const TileGraph& g);

}  // namespace cluster
