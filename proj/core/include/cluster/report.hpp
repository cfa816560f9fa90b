#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cluster {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string summary;
  // Key/value payload describing the first failure (root, both sides, difference, ...).
  std::vector<std::pair<std::string, std::string>> counterexample;
  // Informational findings that do not affect pass/fail.
  std::vector<std::pair<std::string, std::string>> notes;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  void add(CheckResult r);
  // Deterministic order by check name.
  void sort();
};

}  // namespace cluster
