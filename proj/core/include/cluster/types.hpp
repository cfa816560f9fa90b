#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cluster {

enum class Family { A, B, C, D, G2 };

using IntMatrix = std::vector<std::vector<int>>;

// A supported Dynkin type. D_n slots are ordered 1, 1b, 2, ..., n-1.
struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Throws DomainError for unsupported pairs.
DynkinType make_type(Family family, int rank);
DynkinType parse_type(std::string_view tag, int rank);

std::string family_tag(Family family);
// "A3", "D5", "G2".
std::string type_name(DynkinType t);

int coxeter_number(DynkinType t);

// Canonical variable names: x1..xn, with x1b in slot 1 for D_n.
std::vector<std::string> variable_names(DynkinType t);
// Tile/slot labels: "1".."n", with "1b" for D_n.
std::vector<std::string> slot_labels(DynkinType t);
// Numeric label of a slot; both D_n slots 0 and 1 carry label 1.
int slot_number(DynkinType t, int slot);
// Slot holding the given numeric label (the unbarred one for D_n label 1); -1 if absent.
int slot_of_label(DynkinType t, int label);

// The bipartite initial exchange matrix.
IntMatrix exchange_matrix(DynkinType t);

int max_rank(Family family);

// Supported (type, rank) pairs at the desk-scale ranges used by the checks.
std::vector<DynkinType> desk_scale_types();

}  // namespace cluster
