// ppb: command-line front end for the parabolic-barrier ladder toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ppb/fermionic.hpp"
#include "ppb/heisenberg.hpp"
#include "ppb/numeric.hpp"
#include "ppb/poly.hpp"
#include "ppb/serialize.hpp"
#include "ppb/states.hpp"
#include "ppb_tool/expression.hpp"
#include "ppb_tool/verify.hpp"

namespace {

using namespace ppb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridFlags {
  double xmin = -4.0;
  double xmax = 4.0;
  std::size_t points = 8193;

  GridSpec spec() const {
    try {
      return {xmin, xmax, points};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void add_grid_flags(CLI::App* cmd, GridFlags& grid) {
  cmd->add_option("--xmin", grid.xmin, "Left end of the sampling grid")->capture_default_str();
  cmd->add_option("--xmax", grid.xmax, "Right end of the sampling grid")->capture_default_str();
  cmd->add_option("--points", grid.points, "Number of grid nodes")->capture_default_str();
}

Sign parse_sign(const std::string& s) { return s == "+" ? Sign::plus : Sign::minus; }

Json recognized_json(const std::optional<tool::RecognizedState>& r) {
  if (!r) return nullptr;
  Json j = Json::object();
  j["sign"] = std::string(1, sign_char(r->sign));
  j["n"] = r->n;
  j["scalar"] = to_json(r->scalar);
  j["scalar_text"] = r->scalar.to_string();
  return j;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_poly(const std::string& sign_text, unsigned n, const std::string& format, bool closed_form) {
  const Sign sign = parse_sign(sign_text);
  const PolyC p = closed_form ? hermite_ppb_rodrigues(sign, n) : hermite_ppb(sign, n);
  if (format == "csv") {
    std::cout << to_csv(p);
  } else if (format == "latex") {
    std::cout << "H^{" << sign_char(sign) << "}_{" << n << "}(\\xi) = " << to_latex(p) << "\n";
  } else {
    Json j = Json::object();
    j["sign"] = sign_text;
    j["n"] = n;
    j["coeffs"] = to_json(p);
    print(j);
  }
  return kExitOk;
}

int run_state(const std::string& sign_text, unsigned n, const std::string& format, bool ladder, const GridFlags& grid) {
  const Sign sign = parse_sign(sign_text);
  const auto f = ladder ? nth_state_ladder(sign, n) : nth_state_poly(sign, n);
  if (format == "csv") {
    std::cout << to_csv(sample(f, grid.spec()));
    return kExitOk;
  }
  if (format == "latex") throw UsageError("state supports --format json or csv");
  const auto energy = eigen_check(f, Observable::hamiltonian);
  Json j = Json::object();
  j["sign"] = sign_text;
  j["n"] = n;
  j["construction"] = ladder ? "ladder" : "polynomial";
  j["energy"] = energy.is_eigen() ? to_json(*energy.eigenvalue) : Json(nullptr);
  j["state"] = to_json(f);
  print(j);
  return kExitOk;
}

int run_apply(const std::string& text, const std::string& format, const GridFlags& grid) {
  tool::OperatorExpression expr;
  try {
    expr = tool::parse_expression(text);
  } catch (const tool::ExpressionError& e) {
    throw UsageError(std::string("expression ") + e.what());
  }
  const auto evaluation = tool::evaluate_expression(expr);
  if (format == "csv") {
    std::cout << to_csv(sample(evaluation.result, grid.spec()));
    return kExitOk;
  }
  if (format == "latex") throw UsageError("apply supports --format json or csv");
  Json j = Json::object();
  j["expression"] = tool::to_string(expr);
  j["result"] = to_json(evaluation.result);
  j["recognized"] = recognized_json(evaluation.recognized);
  print(j);
  return kExitOk;
}

int run_verify_command(unsigned max_n, const GridFlags& grid) {
  tool::VerifyOptions options;
  options.grid = grid.spec();
  const auto report = tool::run_verify(max_n, options);
  Json j = Json::object();
  j["max_n"] = max_n;
  j["passed"] = report.all_passed();
  j["checks"] = report.to_json();
  print(j);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_evolve(const std::string& lambda_text) {
  std::optional<Lambda> lambda;
  try {
    lambda.emplace(parse_rational(lambda_text));
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
  const auto x_t = evolve(LinearObservable::position(), *lambda);
  const auto p_t = evolve(LinearObservable::momentum(), *lambda);
  Json j = Json::object();
  j["lambda"] = format_rational(lambda->value());
  j["cosh"] = format_rational(lambda->cosh());
  j["sinh"] = format_rational(lambda->sinh());
  j["x"] = to_json(x_t);
  j["p"] = to_json(p_t);
  j["b+"] = to_json(evolve(LinearObservable::ladder(Sign::plus), *lambda));
  j["b-"] = to_json(evolve(LinearObservable::ladder(Sign::minus), *lambda));
  j["commutator_x_p"] = to_json(commutator_scalar(x_t, p_t));
  print(j);
  return kExitOk;
}

int run_fermi() {
  const auto dp = d_plus();
  const auto dm = d_minus();
  const auto number = fermionic_number();
  const auto [e0, e1] = eigenvalues_triangular(number);
  Json relations = Json::object();
  relations["{d+,d-}=1"] = anticommutator(dp, dm) == Matrix2::identity();
  relations["{d+,d+}=0"] = anticommutator(dp, dp) == Matrix2::zero();
  relations["{d-,d-}=0"] = anticommutator(dm, dm) == Matrix2::zero();
  Json j = Json::object();
  j["d_plus"] = to_json(dp);
  j["d_minus"] = to_json(dm);
  j["number"] = to_json(number);
  j["eigenvalues"] = Json::array({to_json(e0), to_json(e1)});
  j["relations"] = relations;
  print(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ladder-operator toolkit for the inverted harmonic oscillator"};
  app.require_subcommand(1);

  std::string sign = "+";
  unsigned n = 0;
  unsigned max_n = 12;
  std::string format = "json";
  std::string lambda = "1";
  std::string expression;
  bool closed_form = false;
  bool ladder = false;
  GridFlags grid;

  const auto add_sign_n = [&](CLI::App* cmd) {
    cmd->add_option("--sign", sign, "State family, + or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    cmd->add_option("--n", n, "Quantum number")->capture_default_str();
  };
  const auto add_format = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
  };

  auto* poly = app.add_subcommand("poly", "Barrier polynomial H^{+-}_n");
  add_sign_n(poly);
  add_format(poly, {"json", "csv", "latex"});
  poly->add_flag("--closed-form", closed_form, "Build from the derivative formula instead of the recurrence");

  auto* state = app.add_subcommand("state", "nth quantum state u^{+-}_n");
  add_sign_n(state);
  add_format(state, {"json", "csv", "latex"});
  state->add_flag("--ladder", ladder, "Build as (b^{+-})^n u^{+-}_0 instead of H^{+-}_n e^{+-i xi^2/2}");
  add_grid_flags(state, grid);

  auto* apply = app.add_subcommand("apply", "Evaluate an operator expression such as \"N b+ u+0\"");
  apply->add_option("expression", expression, "Operators b+ b- N H P T followed by a state u<sign><n>")->required();
  add_format(apply, {"json", "csv", "latex"});
  add_grid_flags(apply, grid);

  auto* verify = app.add_subcommand("verify", "Run the identity and residual suites");
  verify->add_option("--max-n", max_n, "Largest quantum number checked")->capture_default_str();
  add_grid_flags(verify, grid);

  auto* evolve_cmd = app.add_subcommand("evolve", "Heisenberg-picture x, p, b+- at lambda = e^{gamma t}");
  evolve_cmd->add_option("--lambda", lambda, "Positive rational p/q")->capture_default_str();

  auto* fermi = app.add_subcommand("fermi", "Anticommuting analogue d+- and its number operator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return run_poly(sign, n, format, closed_form);
    if (*state) return run_state(sign, n, format, ladder, grid);
    if (*apply) return run_apply(expression, format, grid);
    if (*verify) return run_verify_command(max_n, grid);
    if (*evolve_cmd) return run_evolve(lambda);
    if (*fermi) return run_fermi();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
