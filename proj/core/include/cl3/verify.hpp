#pragma once

// Self-check suite behind `cl3cft verify`: algebra identities, transform
// oracle agreement, inversion, Parseval/Plancherel, the transform property
// table, uncertainty bounds and the heat-kernel law.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cl3 {

struct VerifyOptions {
  // Lattice size for the O(N^2) oracle comparisons (fast vs direct,
  // convolution) and the random transform identities.
  std::size_t size = 8;
  std::uint64_t seed = 1;
  // Random localized fields per uncertainty check.
  int uncertaintyFields = 10;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst error or worst ratio seen
  double tolerance = 0.0;  // what `measured` was held against
  std::string detail;
};

// Runs every check; `progress` (optional) sees each result as it finishes.
std::vector<CheckResult> runVerification(const VerifyOptions& options,
                                         const std::function<void(const CheckResult&)>& progress = {});

}  // namespace cl3
