#include "ppb/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ppb {

LinearObservable LinearObservable::ladder(Sign sign) {
  const ExactScalar c = ExactScalar::inv_sqrt2();
  return {c, sign == Sign::plus ? c : -c};
}

LinearObservable scale(const LinearObservable& a, const ExactScalar& c) { return {a.c_x * c, a.c_p * c}; }

FloatObservable to_float(const LinearObservable& a) { return {to_complex(a.c_x), to_complex(a.c_p)}; }

Lambda::Lambda(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0) throw std::domain_error("evolution parameter lambda must be positive, got " + value_.get_str());
}

Rational Lambda::cosh() const { return Rational((value_ + 1 / value_) / 2); }
Rational Lambda::sinh() const { return Rational((value_ - 1 / value_) / 2); }

LinearObservable evolve(const LinearObservable& obs, const Lambda& param) {
  const ExactScalar ch(param.cosh());
  const ExactScalar sh(param.sinh());
  return {obs.c_x * ch + obs.c_p * sh, obs.c_x * sh + obs.c_p * ch};
}

FloatObservable evolve(const FloatObservable& obs, GammaTime param) {
  const double ch = std::cosh(param.value);
  const double sh = std::sinh(param.value);
  return {obs.c_x * ch + obs.c_p * sh, obs.c_x * sh + obs.c_p * ch};
}

FloatObservable evolve(const LinearObservable& obs, const EvolutionParameter& param) {
  if (const auto* lambda = std::get_if<Lambda>(&param)) return to_float(evolve(obs, *lambda));
  return evolve(to_float(obs), std::get<GammaTime>(param));
}

ExactScalar commutator_scalar(const LinearObservable& a, const LinearObservable& b) {
  return ExactScalar::i() * (a.c_x * b.c_p - a.c_p * b.c_x);
}

namespace {

double distance(const FloatObservable& a, const FloatObservable& b) {
  return std::max(std::abs(a.c_x - b.c_x), std::abs(a.c_p - b.c_p));
}

FloatObservable central_difference(const FloatObservable& obs, double t, double h) {
  const auto fwd = evolve(obs, GammaTime{t + h});
  const auto bwd = evolve(obs, GammaTime{t - h});
  return {(fwd.c_x - bwd.c_x) / (2 * h), (fwd.c_p - bwd.c_p) / (2 * h)};
}

}  // namespace

bool rate_check(const LinearObservable& obs, double rate, RateCheckOptions options) {
  const auto f = to_float(obs);
  const auto derivative = central_difference(f, 0.0, options.step);
  return distance(derivative, {rate * f.c_x, rate * f.c_p}) <= options.tolerance;
}

bool heisenberg_rate_check(Sign sign, RateCheckOptions options) {
  return rate_check(LinearObservable::ladder(sign), sign_value(sign), options);
}

bool momentum_velocity_check(double gamma_t, RateCheckOptions options) {
  const auto x = to_float(LinearObservable::position());
  const auto p_t = evolve(to_float(LinearObservable::momentum()), GammaTime{gamma_t});
  const auto x_dot = central_difference(x, gamma_t, options.step);
  return distance(x_dot, p_t) <= options.tolerance * std::max(1.0, std::cosh(gamma_t));
}

}  // namespace ppb
