#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locham/pauli.hpp"

namespace locham::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t n_points = 20;       // random assignments for the correspondence check
  std::size_t n_samples = 1000;    // sampler draws for the norm sandwich
  std::uint32_t exact_limit = 10;  // largest n for the eigensolver sandwich
  std::uint32_t enumeration_limit = 8;  // largest n for 4^n enumerations
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
  /// First failing check, if any.
  std::optional<CheckResult> first_failure() const;
};

/// Runs the cross-check ladder on one instance: polynomial vs state-vector
/// expectations, variance and influence identities, greedy audits in both
/// directions, the 2-local floor, and, when small enough, sandwiches against
/// exact eigenvalues and exhaustive product-state search.
VerifyReport verify_instance(const Hamiltonian& h, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace locham::cli
