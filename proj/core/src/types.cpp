#include "cluster/types.hpp"

#include <cctype>

#include "cluster/errors.hpp"

namespace cluster {

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::G2: return 2;
  }
  return 1;
}

}  // namespace

int max_rank(Family f) {
  switch (f) {
    case Family::A: return 24;
    case Family::B:
    case Family::C:
    case Family::D: return 12;
    case Family::G2: return 2;
  }
  return 0;
}

DynkinType make_type(Family family, int rank) {
  if (rank < min_rank(family) || rank > max_rank(family)) {
    throw DomainError("unsupported type " + family_tag(family) + " with rank " +
                      std::to_string(rank) + " (allowed " + std::to_string(min_rank(family)) +
                      ".." + std::to_string(max_rank(family)) + ")");
  }
  return DynkinType{family, rank};
}

DynkinType parse_type(std::string_view tag, int rank) {
  std::string t;
  for (char c : tag) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "A") return make_type(Family::A, rank);
  if (t == "B") return make_type(Family::B, rank);
  if (t == "C") return make_type(Family::C, rank);
  if (t == "D") return make_type(Family::D, rank);
  if (t == "G" || t == "G2") return make_type(Family::G2, rank);
  throw DomainError("unknown type tag '" + std::string(tag) + "'");
}

std::string family_tag(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G";
  }
  return "?";
}

std::string type_name(DynkinType t) { return family_tag(t.family) + std::to_string(t.rank); }

int coxeter_number(DynkinType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::G2: return 6;
  }
  return 0;
}

std::vector<std::string> slot_labels(DynkinType t) {
  std::vector<std::string> out;
  if (t.family == Family::D) {
    out = {"1", "1b"};
    for (int m = 2; m < t.rank; ++m) out.push_back(std::to_string(m));
    return out;
  }
  for (int i = 1; i <= t.rank; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> variable_names(DynkinType t) {
  auto labels = slot_labels(t);
  for (auto& l : labels) l = "x" + l;
  return labels;
}

int slot_number(DynkinType t, int slot) {
  if (t.family == Family::D) return slot <= 1 ? 1 : slot;
  return slot + 1;
}

int slot_of_label(DynkinType t, int label) {
  if (t.family == Family::D) {
    if (label == 1) return 0;
    return (label >= 2 && label < t.rank) ? label : -1;
  }
  return (label >= 1 && label <= t.rank) ? label - 1 : -1;
}

IntMatrix exchange_matrix(DynkinType t) {
  const int n = t.rank;
  IntMatrix b(n, std::vector<int>(n, 0));
  if (t.family == Family::G2) return {{0, 1}, {-3, 0}};
  for (int i = 0; i < n; ++i) {
    const int li = slot_number(t, i);
    const int sign = (li % 2 == 1) ? 1 : -1;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (t.family == Family::D && i <= 1 && j <= 1) continue;
      const int lj = slot_number(t, j);
      if (li - lj == 1 || lj - li == 1) b[i][j] = sign;
    }
  }
  if (t.family == Family::B) b[1][0] = -2;
  if (t.family == Family::C) b[0][1] = 2;
  return b;
}

std::vector<DynkinType> desk_scale_types() {
  std::vector<DynkinType> out;
  for (int n = 2; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 5; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 5; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 6; ++n) out.push_back({Family::D, n});
  out.push_back({Family::G2, 2});
  return out;
}

}  // namespace cluster
