#pragma once

#include <complex>
#include <variant>

#include "ppb/poly.hpp"
#include "ppb/scalar.hpp"

namespace ppb {

// Heisenberg-picture evolution of observables linear in x and p, in units
// hbar = m = gamma = 1. Time enters through lambda = e^{gamma t}, which keeps
// cosh and sinh rational for rational lambda.

/// c_x x + c_p p.
struct LinearObservable {
  ExactScalar c_x;
  ExactScalar c_p;

  static LinearObservable position() { return {ExactScalar(1), ExactScalar(0)}; }
  static LinearObservable momentum() { return {ExactScalar(0), ExactScalar(1)}; }
  /// b^{+-} = (x +- p) / sqrt2.
  static LinearObservable ladder(Sign sign);

  bool is_zero() const { return c_x.is_zero() && c_p.is_zero(); }
  friend bool operator==(const LinearObservable&, const LinearObservable&) = default;
};

LinearObservable scale(const LinearObservable& a, const ExactScalar& c);

/// Floating-point counterpart, used only for derivative checks.
struct FloatObservable {
  std::complex<double> c_x;
  std::complex<double> c_p;
};

FloatObservable to_float(const LinearObservable& a);

/// Exact lambda = e^{gamma t} > 0.
class Lambda {
 public:
  /// Throws std::domain_error unless value > 0.
  explicit Lambda(Rational value);
  const Rational& value() const { return value_; }
  Rational cosh() const;
  Rational sinh() const;

 private:
  Rational value_;
};

/// gamma t carried directly as a double.
struct GammaTime {
  double value;
};

using EvolutionParameter = std::variant<Lambda, GammaTime>;

/// Exact evolution: (c_x, c_p) -> (c_x cosh + c_p sinh, c_x sinh + c_p cosh).
LinearObservable evolve(const LinearObservable& obs, const Lambda& param);
/// Float evolution.
FloatObservable evolve(const FloatObservable& obs, GammaTime param);
FloatObservable evolve(const LinearObservable& obs, const EvolutionParameter& param);

/// [a, b] = i (a_x b_p - a_p b_x), with [x, p] = i.
ExactScalar commutator_scalar(const LinearObservable& a, const LinearObservable& b);

struct RateCheckOptions {
  double step = 1e-5;
  double tolerance = 1e-8;
};

/// Central-difference d/dt of evolve(b^{+-}) at t = 0 compared to +-b^{+-}.
bool heisenberg_rate_check(Sign sign, RateCheckOptions options = {});

/// Central-difference d/dt of evolve(obs) at t = 0 compared to rate * obs.
bool rate_check(const LinearObservable& obs, double rate, RateCheckOptions options = {});

/// p(t) = dx(t)/dt (m = 1) at the given gamma t, by central differences.
bool momentum_velocity_check(double gamma_t, RateCheckOptions options = {});

}  // namespace ppb
