#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ppb_tool/verify.hpp"

using namespace ppb;
using namespace ppb::tool;

TEST_CASE("max_n = 0 checks standard states and passes") {
  const auto report = run_verify(0);
  CHECK(report.all_passed());
  for (const auto& c : report.checks) {
    CAPTURE(c.check);
    CHECK(c.passed);
  }
}

TEST_CASE("max_n = 12 passes and covers every identity family") {
  const auto report = run_verify(12);
  std::set<std::string> names;
  for (const auto& c : report.checks) {
    CAPTURE(c.check);
    CAPTURE(c.detail);
    CHECK(c.passed);
    names.insert(c.check);
  }
  for (const char* expected :
       {"standard_state_annihilation_+", "standard_state_number_-", "number_eigenvalue_+", "energy_eigenvalue_-",
        "ladder_matches_polynomial_+", "recurrence_matches_closed_form_-", "polynomial_conjugation_symmetry",
        "ladder_commutator_random", "ladder_power_commutator_+", "intertwining_-", "parity_+", "time_reversal_-",
        "heisenberg_ladder_evolution", "heisenberg_commutator_invariance", "heisenberg_group_law",
        "heisenberg_rate_+", "heisenberg_momentum_velocity", "fermionic_anticommutators", "fermionic_spectrum",
        "finite_difference_residual_+", "finite_difference_convergence_-"}) {
    CHECK(names.count(expected) == 1);
  }
}

TEST_CASE("report JSON schema") {
  VerifyReport report;
  report.checks.push_back({"a", "x = y", true, "ok"});
  report.checks.push_back({"b", "y = z", false, "n = 3: off"});
  CHECK_FALSE(report.all_passed());
  CHECK(report.to_json().dump() ==
        R"([{"check":"a","equation":"x = y","status":"pass","detail":"ok"},)"
        R"({"check":"b","equation":"y = z","status":"fail","detail":"n = 3: off"}])");
}

TEST_CASE("tightened numeric bounds are reported as failures") {
  VerifyOptions options;
  options.residual_bound_low = 1e-12;
  const auto report = run_verify(1, options);
  CHECK_FALSE(report.all_passed());
  bool found = false;
  for (const auto& c : report.checks)
    if (c.check == "finite_difference_residual_+") {
      found = true;
      CHECK_FALSE(c.passed);
      CHECK(c.detail.rfind("n = 0:", 0) == 0);
    }
  CHECK(found);
}
