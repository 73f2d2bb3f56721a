#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppb/numeric.hpp"
#include "ppb/serialize.hpp"

namespace ppb::tool {

struct CheckResult {
  std::string check;
  std::string equation;  // the identity being checked, in plain notation
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  GridSpec grid = GridSpec::standard();
  /// Residual bound for n <= 2 and for 3 <= n <= 5.
  double residual_bound_low = 1e-4;
  double residual_bound_high = 1e-3;
  /// Numeric checks stop here; beyond it the residual bounds are not claimed.
  unsigned numeric_max_n = 5;
  double convergence_min = 3.5;
  double convergence_max = 4.5;
  std::uint64_t seed = 20240607;
  unsigned random_members = 100;
  unsigned random_lambdas = 20;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// [{"check", "equation", "status": "pass"|"fail", "detail"}, ...]
  Json to_json() const;
};

/// Exact identity suite for indices up to max_n, plus the finite-difference
/// residual suite for indices up to min(max_n, numeric_max_n).
VerifyReport run_verify(unsigned max_n, const VerifyOptions& options = {});

}  // namespace ppb::tool
