#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "garside/invariant_sets.hpp"

namespace garside {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;  // descriptive anchor
  nlohmann::json parameters;
  CheckStatus status = CheckStatus::kPass;
  std::string details;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::kFail) == 0; }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::vector<int> n_values{10, 14};
  std::vector<int> k_values{2};
  int samples = 10;
  std::uint64_t seed = 1;
  int max_row_length = 8;  // exhaustive row checks cover p up to this
  SearchBudget budget;
  int oracle_max_n = 11;  // generic enumeration runs only up to here
  Execution exec = Execution::kParallel;
};

/// Runs every structural check of the family at the requested sizes. Checks
/// that do not apply at a size are reported as skipped. Same options give the
/// same report.
VerificationReport verify_suite(const VerifyOptions& options);

}  // namespace garside
