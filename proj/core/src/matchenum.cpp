#include "cluster/matchenum.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cluster/errors.hpp"

namespace cluster {

namespace {

using Mask = std::uint64_t;

void check_size(const MatchingGraph& g) {
  if (g.nvertices > 64) throw DomainError("matching enumeration supports at most 64 vertices");
  for (const auto& e : g.edges)
    if (e.u < 0 || e.v < 0 || e.u >= g.nvertices || e.v >= g.nvertices)
      throw StructuralError("edge endpoint out of range");
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

struct Adjacency {
  // adj[v] = edges (other endpoint, edge index)
  std::vector<std::vector<std::pair<int, int>>> adj;
  explicit Adjacency(const MatchingGraph& g) : adj(g.nvertices) {
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
      const auto& e = g.edges[i];
      if (e.u == e.v) continue;
      adj[e.u].push_back({e.v, i});
      adj[e.v].push_back({e.u, i});
    }
  }
};

class Eliminator {
 public:
  explicit Eliminator(const MatchingGraph& g) : g_(g), adj_(g) {}

  const Laurent& solve(Mask uncovered) {
    auto it = memo_.find(uncovered);
    if (it != memo_.end()) return it->second;
    Laurent total(g_.nvars);
    if (uncovered == 0) {
      total = Laurent::constant(g_.nvars, 1);
    } else if (std::popcount(uncovered) % 2 == 0) {
      const int v = std::countr_zero(uncovered);
      for (const auto& [w, idx] : adj_.adj[v]) {
        if (!(uncovered >> w & 1U)) continue;
        const Laurent& rest = solve(uncovered & ~(Mask{1} << v) & ~(Mask{1} << w));
        if (!rest.is_zero()) total += g_.edges[idx].weight * rest;
      }
    }
    return memo_.emplace(uncovered, std::move(total)).first->second;
  }

 private:
  const MatchingGraph& g_;
  Adjacency adj_;
  std::unordered_map<Mask, Laurent> memo_;
};

}  // namespace

Laurent matching_polynomial(const MatchingGraph& g) {
  check_size(g);
  if (g.nvertices % 2 != 0) return Laurent(g.nvars);
  Eliminator el(g);
  return el.solve(full_mask(g.nvertices));
}

Laurent matching_polynomial_transfer(const MatchingGraph& g) {
  check_size(g);
  if (g.nvertices % 2 != 0) return Laurent(g.nvars);
  Adjacency adj(g);
  std::unordered_map<Mask, Laurent> state;
  state.emplace(0, Laurent::constant(g.nvars, 1));
  for (int v = 0; v < g.nvertices; ++v) {
    const Mask bit = Mask{1} << v;
    std::unordered_map<Mask, Laurent> next;
    auto accumulate = [&next, &g](Mask key, Laurent value) {
      auto [it, inserted] = next.try_emplace(key, Laurent(g.nvars));
      it->second += value;
    };
    for (const auto& [matched, poly] : state) {
      if (matched & bit) {
        accumulate(matched & ~bit, poly);
        continue;
      }
      for (const auto& [w, idx] : adj.adj[v]) {
        if (w < v) continue;
        const Mask wb = Mask{1} << w;
        if (matched & wb) continue;
        accumulate(matched | wb, poly * g.edges[idx].weight);
      }
    }
    state.clear();
    for (auto& [k, p] : next)
      if (!p.is_zero()) state.emplace(k, std::move(p));
  }
  auto it = state.find(0);
  return it == state.end() ? Laurent(g.nvars) : it->second;
}

std::vector<std::vector<int>> perfect_matchings(const MatchingGraph& g) {
  check_size(g);
  std::vector<std::vector<int>> out;
  if (g.nvertices % 2 != 0) return out;
  Adjacency adj(g);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, Mask uncovered) -> void {
    if (uncovered == 0) {
      out.push_back(chosen);
      return;
    }
    const int v = std::countr_zero(uncovered);
    for (const auto& [w, idx] : adj.adj[v]) {
      if (!(uncovered >> w & 1U)) continue;
      chosen.push_back(idx);
      self(self, uncovered & ~(Mask{1} << v) & ~(Mask{1} << w));
      chosen.pop_back();
    }
  };
  rec(rec, full_mask(g.nvertices));
  return out;
}

Laurent cluster_expansion(const TileGraph& g) {
  Laurent p = matching_polynomial(realize(g));
  Exponents mu(g.mu.begin(), g.mu.end());
  if (mu.size() != g.nvars) throw DimensionError("multiplicity vector length mismatch");
  return div_exact(p, Laurent::monomial(g.nvars, mu));
}

Laurent cluster_expansion(DynkinType t, const RootVector& alpha) {
  return cluster_expansion(graph_for_root(t, alpha));
}

}  // namespace cluster
