#pragma once

#include <optional>
#include <stdexcept>

#include "ppb/poly.hpp"
#include "ppb/scalar.hpp"

namespace ppb {

/// Generalized function P(xi) e^{i r xi^2 / 2} with exact rational phase rate r.
///
/// The nth quantum states u^{+-}_n live at r = +-1; the closed-form derivative
/// construction of the barrier polynomials uses r = +-2. The zero function is
/// stored with an empty polynomial and r = 0. A superposition of two different
/// phase rates is not a member of this type.
class PhasePolyFunction {
 public:
  PhasePolyFunction() = default;
  PhasePolyFunction(Rational phase_rate, PolyC poly);

  static PhasePolyFunction zero() { return {}; }

  const Rational& phase_rate() const { return phase_rate_; }
  const PolyC& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const PhasePolyFunction&, const PhasePolyFunction&) = default;

 private:
  Rational phase_rate_{0};
  PolyC poly_;
};

PhasePolyFunction scale(const PhasePolyFunction& f, const ExactScalar& c);

/// Sum of two members with the same phase rate (either may be zero).
/// Throws std::invalid_argument when the phase rates differ.
PhasePolyFunction add(const PhasePolyFunction& f, const PhasePolyFunction& g);
PhasePolyFunction sub(const PhasePolyFunction& f, const PhasePolyFunction& g);

/// Multiplication by e^{i delta xi^2 / 2}.
PhasePolyFunction shift_phase(const PhasePolyFunction& f, const Rational& delta);

/// d/dxi: (r, P) -> (r, P' + i r xi P).
PhasePolyFunction differentiate(const PhasePolyFunction& f);

class UnsupportedPhaseRate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// e^{+i xi^2/2} (plus) or e^{-i xi^2/2} (minus), normalized to B_0 = 1.
PhasePolyFunction standard_state(Sign sign);

/// Normal coordinate b^{+-} = (xi -+ i d/dxi)/sqrt2, in closed form on the family:
///   (r, P) -> (r, ((1 +- r) xi P -+ i P') / sqrt2).
/// Throws UnsupportedPhaseRate unless |r| is 0 or 1.
PhasePolyFunction apply_ladder(Sign sign, const PhasePolyFunction& f);

/// N = (b+ b- + b- b+) / 2.
PhasePolyFunction apply_number(const PhasePolyFunction& f);

/// H = -N, in units of hbar gamma.
PhasePolyFunction apply_hamiltonian(const PhasePolyFunction& f);

/// (b^{+-})^n u^{+-}_0.
PhasePolyFunction nth_state_ladder(Sign sign, unsigned n);

/// H^{+-}_n(xi) e^{+-i xi^2/2}, i.e. B_n = 1.
PhasePolyFunction nth_state_poly(Sign sign, unsigned n);

/// The scalar c with f = c g, if one exists. f = 0 gives c = 0.
/// Throws std::domain_error when g is the zero function.
std::optional<ExactScalar> proportionality_scalar(const PhasePolyFunction& f, const PhasePolyFunction& g);

struct EigenReport {
  std::optional<ExactScalar> eigenvalue;

  bool is_eigen() const { return eigenvalue.has_value(); }
};

enum class Observable { number, hamiltonian };

/// Throws std::invalid_argument for the zero function.
EigenReport eigen_check(const PhasePolyFunction& f, Observable op);

/// Space inversion xi -> -xi.
PhasePolyFunction parity(const PhasePolyFunction& f);

/// Antiunitary time reversal: complex conjugation of the representative.
PhasePolyFunction time_reverse(const PhasePolyFunction& f);

/// Checks [b^-+, (b^{+-})^n] probe == +-i n (b^{+-})^{n-1} probe by composition.
bool commutator_identity_check(unsigned n, Sign sign, const PhasePolyFunction& probe);

}  // namespace ppb
