#include "ppb_tool/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ppb/fermionic.hpp"
#include "ppb/heisenberg.hpp"
#include "ppb/poly.hpp"
#include "ppb/states.hpp"
#include "ppb_tool/generators.hpp"

namespace ppb::tool {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json entry = Json::object();
    entry["check"] = c.check;
    entry["equation"] = c.equation;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["detail"] = c.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

constexpr Sign kSigns[] = {Sign::plus, Sign::minus};

std::string label(Sign s) { return std::string(1, sign_char(s)); }

std::string state_label(Sign s, unsigned n) { return "u" + label(s) + std::to_string(n); }

// Runs `body(n)` for n in [first, last]; the first failing index and its
// message end up in the detail string.
CheckResult over_indices(std::string check, std::string equation, unsigned first, unsigned last,
                         const std::function<std::string(unsigned)>& body) {
  CheckResult result{std::move(check), std::move(equation), true, ""};
  for (unsigned n = first; n <= last; ++n) {
    std::string failure;
    try {
      failure = body(n);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      result.passed = false;
      result.detail = "n = " + std::to_string(n) + ": " + failure;
      return result;
    }
  }
  result.detail = first > last ? "no indices in range" : "n = " + std::to_string(first) + ".." + std::to_string(last);
  return result;
}

CheckResult single(std::string check, std::string equation, bool passed, std::string detail) {
  return {std::move(check), std::move(equation), passed, std::move(detail)};
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void standard_state_checks(VerifyReport& report) {
  for (const Sign s : kSigns) {
    const auto u0 = standard_state(s);
    const auto annihilated = apply_ladder(opposite(s), u0);
    report.checks.push_back(single("standard_state_annihilation_" + label(s),
                                   "b" + label(opposite(s)) + " u" + label(s) + "0 = 0", annihilated.is_zero(),
                                   annihilated.is_zero() ? "zero function" : "nonzero image"));
    const ExactScalar expected(0, Rational(sign_value(s), 2));
    const auto report_n = eigen_check(u0, Observable::number);
    const bool ok = report_n.is_eigen() && *report_n.eigenvalue == expected;
    report.checks.push_back(single("standard_state_number_" + label(s),
                                   "N u" + label(s) + "0 = " + label(s) + "(i/2) u" + label(s) + "0", ok,
                                   report_n.is_eigen() ? "eigenvalue " + report_n.eigenvalue->to_string()
                                                       : "not an eigenstate"));
  }
}

void eigenvalue_checks(VerifyReport& report, unsigned max_n) {
  for (const Sign s : kSigns) {
    const long sv = sign_value(s);
    report.checks.push_back(over_indices(
        "number_eigenvalue_" + label(s), "N (b" + label(s) + ")^n u" + label(s) + "0 = " + label(s) + "i(n+1/2) (b" +
            label(s) + ")^n u" + label(s) + "0",
        0, max_n, [&](unsigned n) -> std::string {
          const auto r = eigen_check(nth_state_ladder(s, n), Observable::number);
          const ExactScalar expected(0, Rational(sv * (2 * static_cast<long>(n) + 1), 2));
          if (!r.is_eigen()) return "not an eigenstate";
          if (*r.eigenvalue != expected) return "eigenvalue " + r.eigenvalue->to_string();
          return "";
        }));
    report.checks.push_back(over_indices(
        "energy_eigenvalue_" + label(s), "H u" + label(s) + "n = " + label(opposite(s)) + "i(n+1/2) u" + label(s) + "n",
        0, max_n, [&](unsigned n) -> std::string {
          const auto r = eigen_check(nth_state_ladder(s, n), Observable::hamiltonian);
          const ExactScalar expected(0, Rational(-sv * (2 * static_cast<long>(n) + 1), 2));
          if (!r.is_eigen()) return "not an eigenstate";
          if (*r.eigenvalue != expected) return "eigenvalue " + r.eigenvalue->to_string();
          return "";
        }));
  }
}

void construction_checks(VerifyReport& report, unsigned max_n) {
  for (const Sign s : kSigns) {
    report.checks.push_back(over_indices(
        "ladder_matches_polynomial_" + label(s),
        "(b" + label(s) + ")^n u" + label(s) + "0 = (1/sqrt2)^n H" + label(s) + "n e^(" + label(s) + "i xi^2/2)", 0,
        max_n, [&](unsigned n) -> std::string {
          const auto ratio = proportionality_scalar(nth_state_ladder(s, n), nth_state_poly(s, n));
          if (!ratio) return "not proportional";
          if (*ratio != pow(ExactScalar::inv_sqrt2(), n)) return "ratio " + ratio->to_string();
          return "";
        }));
    report.checks.push_back(over_indices(
        "recurrence_matches_closed_form_" + label(s),
        "H" + label(s) + "n = (" + label(opposite(s)) + "i)^n e^(" + label(opposite(s)) + "i xi^2) d^n/dxi^n e^(" +
            label(s) + "i xi^2)",
        0, max_n, [&](unsigned n) -> std::string {
          return hermite_ppb(s, n) == hermite_ppb_rodrigues(s, n) ? "" : "coefficients differ";
        }));
  }
  report.checks.push_back(over_indices("polynomial_conjugation_symmetry", "H-n = conj(H+n)", 0, max_n,
                                       [](unsigned n) -> std::string {
                                         const bool ok = hermite_ppb(Sign::minus, n) ==
                                                             poly_conjugate(hermite_ppb(Sign::plus, n)) &&
                                                         hermite_ppb_rodrigues(Sign::minus, n) ==
                                                             poly_conjugate(hermite_ppb_rodrigues(Sign::plus, n));
                                         return ok ? "" : "H-n differs from conj(H+n)";
                                       }));
}

void commutator_checks(VerifyReport& report, unsigned max_n, const VerifyOptions& options) {
  const auto bracket = [](const PhasePolyFunction& f) {
    return sub(apply_ladder(Sign::plus, apply_ladder(Sign::minus, f)),
               apply_ladder(Sign::minus, apply_ladder(Sign::plus, f)));
  };
  const ExactScalar minus_i(0, -1);
  for (const Sign s : kSigns) {
    report.checks.push_back(over_indices("ladder_commutator_basis_" + label(s), "[b+, b-] f = -i f", 0, max_n,
                                         [&](unsigned n) -> std::string {
                                           const auto f = nth_state_poly(s, n);
                                           return bracket(f) == scale(f, minus_i) ? "" : "on " + state_label(s, n);
                                         }));
  }

  std::mt19937_64 rng(options.seed);
  CheckResult random{"ladder_commutator_random", "[b+, b-] f = -i f", true,
                     std::to_string(options.random_members) + " random family members"};
  for (unsigned k = 0; k < options.random_members; ++k) {
    const auto f = random_family_member(rng);
    if (bracket(f) != scale(f, minus_i)) {
      random.passed = false;
      random.detail = "member " + std::to_string(k) + " violates the relation";
      break;
    }
  }
  report.checks.push_back(std::move(random));

  const unsigned max_power = std::clamp(max_n, 1u, 8u);
  for (const Sign s : kSigns) {
    const std::string ps = label(s);
    const std::string ms = label(opposite(s));
    report.checks.push_back(over_indices(
        "ladder_power_commutator_" + ps, "[b" + ms + ", (b" + ps + ")^n] = " + ps + "i n (b" + ps + ")^(n-1)", 1,
        max_power, [&](unsigned n) -> std::string {
          for (const Sign probe_sign : kSigns)
            for (unsigned k = 0; k <= max_n; ++k)
              if (!commutator_identity_check(n, s, nth_state_poly(probe_sign, k)))
                return "probe " + state_label(probe_sign, k);
          return "";
        }));
  }
}

void intertwining_checks(VerifyReport& report, unsigned max_n) {
  // (-+i d/dxi + xi) f = e^{-+i xi^2/2} (-+i d/dxi) (e^{+-i xi^2/2} f)
  for (const Sign s : kSigns) {
    const long sv = sign_value(s);
    const ExactScalar minus_i_sign(0, -sv);
    report.checks.push_back(over_indices(
        "intertwining_" + label(s),
        "(" + label(opposite(s)) + "i d/dxi + xi) f = e^(" + label(opposite(s)) + "i xi^2/2) (" + label(opposite(s)) +
            "i d/dxi) e^(" + label(s) + "i xi^2/2) f",
        0, max_n, [&](unsigned n) -> std::string {
          for (const Sign family : kSigns) {
            const auto f = nth_state_poly(family, n);
            const auto lhs = add(scale(differentiate(f), minus_i_sign), {f.phase_rate(), poly_shift(f.poly(), 1)});
            const auto rhs = shift_phase(scale(differentiate(shift_phase(f, Rational(sv))), minus_i_sign), Rational(-sv));
            if (lhs != rhs) return "on " + state_label(family, n);
          }
          return "";
        }));
  }
}

void symmetry_checks(VerifyReport& report, unsigned max_n) {
  for (const Sign s : kSigns) {
    report.checks.push_back(over_indices("parity_" + label(s), "P u" + label(s) + "n = (-1)^n u" + label(s) + "n", 0,
                                         max_n, [&](unsigned n) -> std::string {
                                           const auto u = nth_state_poly(s, n);
                                           const ExactScalar expected(n % 2 == 0 ? 1 : -1);
                                           return parity(u) == scale(u, expected) ? "" : "wrong parity";
                                         }));
    report.checks.push_back(over_indices("time_reversal_" + label(s),
                                         "T u" + label(s) + "n = u" + label(opposite(s)) + "n", 0, max_n,
                                         [&](unsigned n) -> std::string {
                                           const bool poly_ok = time_reverse(nth_state_poly(s, n)) ==
                                                                nth_state_poly(opposite(s), n);
                                           const bool ladder_ok = time_reverse(nth_state_ladder(s, n)) ==
                                                                  nth_state_ladder(opposite(s), n);
                                           return poly_ok && ladder_ok ? "" : "states not interchanged";
                                         }));
  }
}

void heisenberg_checks(VerifyReport& report, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed + 1);
  std::vector<Lambda> lambdas;
  for (unsigned k = 0; k < options.random_lambdas; ++k) lambdas.emplace_back(random_positive_rational(rng));

  bool eigen_ok = true;
  bool symplectic_ok = true;
  bool group_ok = true;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const auto& lambda = lambdas[k];
    const ExactScalar l(lambda.value());
    eigen_ok = eigen_ok &&
               evolve(LinearObservable::ladder(Sign::plus), lambda) == scale(LinearObservable::ladder(Sign::plus), l) &&
               evolve(LinearObservable::ladder(Sign::minus), lambda) ==
                   scale(LinearObservable::ladder(Sign::minus), inverse(l));
    const auto x_t = evolve(LinearObservable::position(), lambda);
    const auto p_t = evolve(LinearObservable::momentum(), lambda);
    const auto a = random_observable(rng);
    const auto b = random_observable(rng);
    symplectic_ok = symplectic_ok && commutator_scalar(x_t, p_t) == ExactScalar::i() &&
                    commutator_scalar(evolve(a, lambda), evolve(b, lambda)) == commutator_scalar(a, b);
    const auto& other = lambdas[(k + 1) % lambdas.size()];
    group_ok = group_ok && evolve(evolve(a, lambda), other) == evolve(a, Lambda(lambda.value() * other.value()));
  }
  const std::string n_lambdas = std::to_string(lambdas.size()) + " random rational lambda";
  report.checks.push_back(single("heisenberg_ladder_evolution", "b+-(t) = b+- e^(+-gamma t)", eigen_ok, n_lambdas));
  report.checks.push_back(single("heisenberg_commutator_invariance", "[x(t), p(t)] = i", symplectic_ok, n_lambdas));
  report.checks.push_back(single("heisenberg_group_law", "U(lambda1) U(lambda2) = U(lambda1 lambda2)", group_ok,
                                 n_lambdas));
  for (const Sign s : kSigns) {
    report.checks.push_back(single("heisenberg_rate_" + label(s), "d b" + label(s) + "/dt = " + label(s) + "gamma b" +
                                                                      label(s),
                                   heisenberg_rate_check(s), "central difference, step 1e-5, tolerance 1e-8"));
  }
  const bool velocity_ok = momentum_velocity_check(0.0) && momentum_velocity_check(0.5) && momentum_velocity_check(-1.25);
  report.checks.push_back(single("heisenberg_momentum_velocity", "p(t) = m dx(t)/dt", velocity_ok,
                                 "gamma t in {0, 0.5, -1.25}"));
}

void fermionic_checks(VerifyReport& report) {
  const auto dp = d_plus();
  const auto dm = d_minus();
  const bool relations = anticommutator(dp, dm) == Matrix2::identity() && anticommutator(dp, dp) == Matrix2::zero() &&
                         anticommutator(dm, dm) == Matrix2::zero();
  report.checks.push_back(single("fermionic_anticommutators", "{d+, d-} = 1, {d+, d+} = {d-, d-} = 0", relations,
                                 "2x2 representation"));
  const auto [e0, e1] = eigenvalues_triangular(fermionic_number());
  const ExactScalar half_i(0, Rational(1, 2));
  const bool spectrum = (e0 == half_i && e1 == -half_i) || (e0 == -half_i && e1 == half_i);
  report.checks.push_back(single("fermionic_spectrum", "spec (i/2)[d+, d-] = {i/2, -i/2}", spectrum,
                                 "eigenvalues " + e0.to_string() + ", " + e1.to_string()));
}

void numeric_checks(VerifyReport& report, unsigned max_n, const VerifyOptions& options) {
  const unsigned last = std::min(max_n, options.numeric_max_n);
  const auto fine = options.grid.refined();
  for (const Sign s : kSigns) {
    std::string residuals;
    report.checks.push_back(over_indices(
        "finite_difference_residual_" + label(s), "H_fd u" + label(s) + "n = " + label(opposite(s)) + "i(n+1/2) u" +
                                                      label(s) + "n",
        0, last, [&](unsigned n) -> std::string {
          const double residual = eigen_residual(s, n, options.grid);
          const double bound = n <= 2 ? options.residual_bound_low : options.residual_bound_high;
          if (!(residual < bound)) return "residual " + format_double(residual) + " >= " + format_double(bound);
          return "";
        }));
    report.checks.push_back(over_indices(
        "finite_difference_convergence_" + label(s), "residual(h) / residual(h/2) in [3.5, 4.5]", 0, last,
        [&](unsigned n) -> std::string {
          const double ratio = eigen_residual(s, n, options.grid) / eigen_residual(s, n, fine);
          if (ratio < options.convergence_min || ratio > options.convergence_max)
            return "ratio " + format_double(ratio);
          return "";
        }));
  }
}

}  // namespace

VerifyReport run_verify(unsigned max_n, const VerifyOptions& options) {
  VerifyReport report;
  // An exception inside a section becomes a failed entry for that section.
  const auto guarded = [&](const char* section, const std::function<void()>& run) {
    try {
      run();
    } catch (const std::exception& e) {
      report.checks.push_back({section, "(section aborted)", false, std::string("exception: ") + e.what()});
    }
  };
  guarded("standard_states", [&] { standard_state_checks(report); });
  guarded("eigenvalues", [&] { eigenvalue_checks(report, max_n); });
  guarded("constructions", [&] { construction_checks(report, max_n); });
  guarded("commutators", [&] { commutator_checks(report, max_n, options); });
  guarded("intertwining", [&] { intertwining_checks(report, max_n); });
  guarded("symmetries", [&] { symmetry_checks(report, max_n); });
  guarded("heisenberg", [&] { heisenberg_checks(report, options); });
  guarded("fermionic", [&] { fermionic_checks(report); });
  guarded("numeric", [&] { numeric_checks(report, max_n, options); });
  return report;
}

}  // namespace ppb::tool
