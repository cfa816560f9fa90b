#include "cluster/mutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cluster/errors.hpp"

namespace cluster {

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  const int n = static_cast<int>(b.size());
  if (k < 0 || k >= n) throw DomainError("mutation index out of range");
  IntMatrix r = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r[i][j] = -b[i][j];
      } else {
        r[i][j] = b[i][j] + std::max(-b[i][k], 0) * b[k][j] + b[i][k] * std::max(b[k][j], 0);
      }
    }
  }
  return r;
}

std::optional<std::vector<int>> skew_symmetrizer(const IntMatrix& b) {
  const int n = static_cast<int>(b.size());
  // d_i as reduced fractions num/den.
  std::vector<long> num(n, 0), den(n, 1);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((b[i][j] == 0) != (b[j][i] == 0)) return std::nullopt;
        if (b[i][j] == 0) continue;
        // d_j = d_i * b_ij / (-b_ji)
        long p = num[i] * b[i][j], q = den[i] * -static_cast<long>(b[j][i]);
        if (q < 0) { p = -p; q = -q; }
        if (p <= 0) return std::nullopt;
        long g = std::gcd(p, q);
        p /= g;
        q /= g;
        if (num[j] == 0) {
          num[j] = p;
          den[j] = q;
          stack.push_back(j);
        } else if (num[j] != p || den[j] != q) {
          return std::nullopt;
        }
      }
    }
  }
  long l = 1;
  for (long d : den) l = std::lcm(l, d);
  std::vector<int> d(n);
  long g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, num[i] * (l / den[i]));
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (l / den[i]) / g);
  return d;
}

bool is_bipartite(const IntMatrix& b) {
  for (const auto& row : b) {
    bool pos = false, neg = false;
    for (int v : row) {
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

Seed initial_seed(DynkinType t) {
  t = make_type(t.family, t.rank);
  Seed s;
  s.matrix = exchange_matrix(t);
  for (int i = 0; i < t.rank; ++i) s.cluster.push_back(Laurent::variable(t.rank, i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const int n = static_cast<int>(s.cluster.size());
  if (k < 0 || k >= n) throw DomainError("mutation index out of range");
  const std::size_t nv = s.cluster[k].nvars();
  Laurent plus = Laurent::constant(nv, 1), minus = Laurent::constant(nv, 1);
  for (int j = 0; j < n; ++j) {
    int e = s.matrix[k][j];
    if (e > 0) plus *= s.cluster[j].pow(static_cast<unsigned>(e));
    if (e < 0) minus *= s.cluster[j].pow(static_cast<unsigned>(-e));
  }
  Seed r = s;
  try {
    r.cluster[k] = div_exact(plus + minus, s.cluster[k]);
  } catch (const DivisibilityError& e) {
    throw ConsistencyError(std::string("exchange quotient is not a Laurent polynomial: ") +
                           e.what());
  }
  r.matrix = mutate_matrix(s.matrix, k);
  return r;
}

const Laurent* BeltLattice::at(int col, int sup) const {
  for (const auto& row : rows)
    for (const auto& e : row)
      if (e.col == col && e.sup == sup) return &e.value;
  return nullptr;
}

int default_belt_cap(DynkinType t) { return 2 * (coxeter_number(t) + 2); }

namespace {

bool is_noninitial(const Exponents& d) {
  return std::all_of(d.begin(), d.end(), [](int v) { return v >= 0; });
}

}  // namespace

BeltLattice belt(DynkinType t, int max_rows, int extra_rows) {
  t = make_type(t.family, t.rank);
  if (max_rows < 1) throw DomainError("belt: max_rows must be at least 1");
  const auto roots = positive_roots(t);
  const std::set<RootVector> target(roots.begin(), roots.end());

  BeltLattice lat{t, {}};
  Seed seed = initial_seed(t);
  std::vector<int> odd, even;
  for (int s = 0; s < t.rank; ++s) (slot_number(t, s) % 2 ? odd : even).push_back(s);

  for (const auto* half : {&odd, &even}) {
    std::vector<BeltEntry> row;
    for (int s : *half) row.push_back({s, 0, seed.cluster[s]});
    lat.rows.push_back(std::move(row));
  }

  std::set<RootVector> covered;
  int remaining_extra = -1;
  for (int r = 1;; ++r) {
    if (remaining_extra == 0) break;
    if (remaining_extra < 0 && r > max_rows)
      throw IncompletenessError("belt for " + type_name(t) + " did not cover all " +
                                std::to_string(target.size()) + " positive roots within " +
                                std::to_string(max_rows) + " rows");
    const auto& half = (r % 2 == 1) ? odd : even;
    std::vector<BeltEntry> row;
    for (int s : half) {
      seed = mutate_seed(seed, s);
      row.push_back({s, r, seed.cluster[s]});
      Exponents d = split(seed.cluster[s]).denominator;
      if (is_noninitial(d)) covered.insert(d);
    }
    lat.rows.push_back(std::move(row));
    if (remaining_extra > 0) {
      --remaining_extra;
    } else if (remaining_extra < 0 && covered == target) {
      remaining_extra = extra_rows;
    }
  }
  return lat;
}

std::map<RootVector, Laurent> noninitial_variables(const BeltLattice& lattice) {
  std::map<RootVector, Laurent> out;
  for (const auto& row : lattice.rows) {
    for (const auto& e : row) {
      Exponents d = split(e.value).denominator;
      if (!is_noninitial(d)) continue;
      auto [it, inserted] = out.emplace(d, e.value);
      if (!inserted && !(it->second == e.value))
        throw BijectionError("two distinct variables share a denominator vector");
    }
  }
  return out;
}

std::map<RootVector, Laurent> noninitial_variables(DynkinType t) {
  auto out = noninitial_variables(belt(t, default_belt_cap(t)));
  auto roots = positive_roots(t);
  if (out.size() != roots.size())
    throw BijectionError("denominator vectors do not match the positive roots");
  for (const auto& r : roots)
    if (!out.count(r)) throw BijectionError("missing positive root in belt output");
  return out;
}

}  // namespace cluster
