#pragma once

#include <string>
#include <vector>

#include "cluster/extended.hpp"
#include "cluster/report.hpp"
#include "cluster/types.hpp"

namespace cluster {

// Belt variables against matching expansions for every positive root, plus family size,
// injectivity of multiplicity vectors and positivity of numerators.
CheckResult verify_theorem(DynkinType t);

// Every diamond of the belt against the relation fixed by its column.
CheckResult check_belt_diamonds(DynkinType t);

// A_{2n-1} -> C_n and D_n -> B_{n-1}.
CheckResult check_folding_ac(int n);
CheckResult check_folding_db(int n);

// Named suites: "theorem", "diamonds", "condensation", "center-one", "excision", "folding".
std::vector<std::string> suite_names();

// The theorem and diamond suites run over `types`; the other suites are type-independent.
// jobs > 1 runs checks concurrently; results are merged in name order.
VerificationReport run_suites(const std::vector<std::string>& suites,
                              const std::vector<DynkinType>& types, int jobs = 1);

}  // namespace cluster
