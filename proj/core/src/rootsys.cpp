#include "cluster/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "cluster/errors.hpp"

namespace cluster {

CartanSpec cartan(DynkinType t) {
  IntMatrix b = exchange_matrix(t);
  const int n = t.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = (i == j) ? 2 : -std::abs(b[i][j]);
  return {t, a};
}

std::vector<RootVector> positive_roots(const CartanSpec& spec) {
  const int n = spec.type.rank;
  if (static_cast<int>(spec.a.size()) != n) throw DomainError("Cartan matrix size mismatch");
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  const std::size_t cap = 4096;
  while (!queue.empty()) {
    RootVector alpha = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += alpha[i] * spec.a[i][j];
      if (pairing == 0) continue;
      RootVector beta = alpha;
      beta[j] -= pairing;
      if (std::any_of(beta.begin(), beta.end(), [](int v) { return v < 0; })) continue;
      if (seen.insert(beta).second) {
        if (seen.size() > cap) throw DomainError("reflection closure exceeded iteration cap");
        queue.push_back(beta);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<RootVector> positive_roots(DynkinType t) { return positive_roots(cartan(t)); }

std::size_t expected_root_count(DynkinType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G2: return 6;
  }
  return 0;
}

bool is_positive_root(DynkinType t, const RootVector& alpha) {
  auto roots = positive_roots(t);
  return std::binary_search(roots.begin(), roots.end(), alpha);
}

}  // namespace cluster
