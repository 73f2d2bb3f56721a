#include "ppb/states.hpp"

#include <utility>

#include "mutation.hpp"

namespace ppb {

PhasePolyFunction::PhasePolyFunction(Rational phase_rate, PolyC poly)
    : phase_rate_(std::move(phase_rate)), poly_(std::move(poly)) {
  phase_rate_.canonicalize();
  if (poly_.is_zero()) phase_rate_ = 0;
}

PhasePolyFunction scale(const PhasePolyFunction& f, const ExactScalar& c) {
  return {f.phase_rate(), poly_scale(f.poly(), c)};
}

PhasePolyFunction add(const PhasePolyFunction& f, const PhasePolyFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.phase_rate() != g.phase_rate())
    throw std::invalid_argument("cannot add phase-polynomial functions with different phase rates");
  return {f.phase_rate(), poly_add(f.poly(), g.poly())};
}

PhasePolyFunction sub(const PhasePolyFunction& f, const PhasePolyFunction& g) {
  return add(f, scale(g, ExactScalar(-1)));
}

PhasePolyFunction shift_phase(const PhasePolyFunction& f, const Rational& delta) {
  return {f.phase_rate() + delta, f.poly()};
}

PhasePolyFunction differentiate(const PhasePolyFunction& f) {
  const ExactScalar i_rate(0, f.phase_rate());
  return {f.phase_rate(), poly_add(poly_differentiate(f.poly()), poly_shift(poly_scale(f.poly(), i_rate), 1))};
}

PhasePolyFunction standard_state(Sign sign) { return {Rational(sign_value(sign)), PolyC::constant(1)}; }

PhasePolyFunction apply_ladder(Sign sign, const PhasePolyFunction& f) {
  if (f.is_zero()) return f;
  const Rational& r = f.phase_rate();
  if (abs(r) != 1 && r != 0)
    throw UnsupportedPhaseRate("ladder operators act on phase rates 0 and +-1 only, got " + r.get_str());
  using detail::Mutation;
  using detail::mutable_sign;
  const long s = sign_value(sign);
  const Rational xi_factor = mutable_sign(Mutation::ladder_xi_term, 1) +
                             mutable_sign(Mutation::ladder_phase_rate, s) * r;
  const ExactScalar derivative_factor(0, mutable_sign(Mutation::ladder_derivative_term, -s));
  PolyC poly = poly_add(poly_shift(poly_scale(f.poly(), ExactScalar(xi_factor)), 1),
                        poly_scale(poly_differentiate(f.poly()), derivative_factor));
  return {r, poly_scale(poly, ExactScalar::inv_sqrt2())};
}

PhasePolyFunction apply_number(const PhasePolyFunction& f) {
  const auto plus_minus = apply_ladder(Sign::plus, apply_ladder(Sign::minus, f));
  const auto minus_plus = apply_ladder(Sign::minus, apply_ladder(Sign::plus, f));
  return scale(add(plus_minus, minus_plus), ExactScalar(Rational(1, 2)));
}

PhasePolyFunction apply_hamiltonian(const PhasePolyFunction& f) { return scale(apply_number(f), ExactScalar(-1)); }

PhasePolyFunction nth_state_ladder(Sign sign, unsigned n) {
  auto f = standard_state(sign);
  for (unsigned k = 0; k < n; ++k) f = apply_ladder(sign, f);
  return f;
}

PhasePolyFunction nth_state_poly(Sign sign, unsigned n) {
  return {Rational(sign_value(sign)), hermite_ppb(sign, n)};
}

std::optional<ExactScalar> proportionality_scalar(const PhasePolyFunction& f, const PhasePolyFunction& g) {
  if (g.is_zero()) throw std::domain_error("proportionality against the zero function");
  if (f.is_zero()) return ExactScalar{};
  if (f.phase_rate() != g.phase_rate() || f.poly().degree() != g.poly().degree()) return std::nullopt;
  ExactScalar c = f.poly().leading() / g.poly().leading();
  if (poly_scale(g.poly(), c) != f.poly()) return std::nullopt;
  return c;
}

EigenReport eigen_check(const PhasePolyFunction& f, Observable op) {
  if (f.is_zero()) throw std::invalid_argument("eigen_check on the zero function");
  const auto image = op == Observable::number ? apply_number(f) : apply_hamiltonian(f);
  return {proportionality_scalar(image, f)};
}

PhasePolyFunction parity(const PhasePolyFunction& f) { return {f.phase_rate(), poly_reflect(f.poly())}; }

PhasePolyFunction time_reverse(const PhasePolyFunction& f) { return {-f.phase_rate(), poly_conjugate(f.poly())}; }

bool commutator_identity_check(unsigned n, Sign sign, const PhasePolyFunction& probe) {
  if (n == 0) throw std::invalid_argument("commutator identity needs a positive power");
  const Sign other = opposite(sign);
  const auto power = [&](PhasePolyFunction f, unsigned k) {
    for (unsigned j = 0; j < k; ++j) f = apply_ladder(sign, f);
    return f;
  };
  const auto lhs = sub(apply_ladder(other, power(probe, n)), power(apply_ladder(other, probe), n));
  const ExactScalar factor(0, static_cast<long>(n) * sign_value(sign));
  const auto rhs = scale(power(probe, n - 1), factor);
  return lhs == rhs;
}

}  // namespace ppb
