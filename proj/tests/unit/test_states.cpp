#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ppb/states.hpp"
#include "ppb_tool/generators.hpp"

using namespace ppb;

namespace {

const ExactScalar kI = ExactScalar::i();
const ExactScalar kSqrt2 = ExactScalar::sqrt2();

PhasePolyFunction fn(long rate, PolyC poly) { return {Rational(rate), std::move(poly)}; }

ExactScalar i_times(Rational q) { return ExactScalar(0, std::move(q)); }

}  // namespace

TEST_CASE("zero function is canonical") {
  const PhasePolyFunction z(Rational(1), PolyC());
  CHECK(z.is_zero());
  CHECK(z.phase_rate() == 0);
  CHECK(z == PhasePolyFunction::zero());
  CHECK(apply_ladder(Sign::plus, z).is_zero());
  CHECK(parity(z).is_zero());
  CHECK(time_reverse(z).is_zero());
}

TEST_CASE("standard states") {
  CHECK(standard_state(Sign::plus) == fn(1, PolyC::constant(1)));
  CHECK(standard_state(Sign::minus) == fn(-1, PolyC::constant(1)));
  CHECK(apply_ladder(Sign::minus, standard_state(Sign::plus)).is_zero());
  CHECK(apply_ladder(Sign::plus, standard_state(Sign::minus)).is_zero());
}

TEST_CASE("differentiate") {
  // d/dxi e^{i xi^2/2} = i xi e^{i xi^2/2}
  CHECK(differentiate(standard_state(Sign::plus)) == fn(1, PolyC::monomial(kI, 1)));
  // d/dxi (xi e^{-i xi^2/2}) = (1 - i xi^2) e^{-i xi^2/2}
  CHECK(differentiate(fn(-1, PolyC::monomial(ExactScalar(1), 1))) ==
        fn(-1, PolyC{ExactScalar(1), ExactScalar(), ExactScalar(0, -1)}));
  CHECK(differentiate(PhasePolyFunction::zero()).is_zero());
}

TEST_CASE("apply_ladder") {
  const auto u0 = standard_state(Sign::plus);
  const auto raised = apply_ladder(Sign::plus, u0);
  CHECK(raised == fn(1, PolyC::monomial(kSqrt2, 1)));
  CHECK(apply_ladder(Sign::minus, raised) == scale(u0, kI));
  CHECK_THROWS_AS(apply_ladder(Sign::plus, fn(2, PolyC::constant(1))), UnsupportedPhaseRate);
  CHECK_THROWS_AS(apply_ladder(Sign::plus, PhasePolyFunction(Rational(1, 2), PolyC::constant(1))),
                  UnsupportedPhaseRate);
  // Plain polynomials (r = 0): b+ 1 = xi / sqrt2.
  CHECK(apply_ladder(Sign::plus, fn(0, PolyC::constant(1))) == fn(0, PolyC::monomial(ExactScalar::inv_sqrt2(), 1)));
}

TEST_CASE("ladder closed form equals the definition (xi f -+ i f') / sqrt2") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = tool::random_family_member(rng);
    for (const Sign s : {Sign::plus, Sign::minus}) {
      const ExactScalar minus_i_sign(0, -sign_value(s));
      const auto definition = scale(
          add(PhasePolyFunction(f.phase_rate(), poly_shift(f.poly(), 1)), scale(differentiate(f), minus_i_sign)),
          ExactScalar::inv_sqrt2());
      CHECK(apply_ladder(s, f) == definition);
    }
  }
}

TEST_CASE("number and hamiltonian on standard states") {
  const auto up = standard_state(Sign::plus);
  const auto um = standard_state(Sign::minus);
  CHECK(apply_number(up) == scale(up, i_times(Rational(1, 2))));
  CHECK(apply_number(um) == scale(um, i_times(Rational(-1, 2))));
  CHECK(apply_hamiltonian(up) == scale(up, i_times(Rational(-1, 2))));
  CHECK(apply_hamiltonian(um) == scale(um, i_times(Rational(1, 2))));
  const auto raised = fn(1, PolyC::monomial(kSqrt2, 1));
  CHECK(apply_number(raised) == scale(raised, i_times(Rational(3, 2))));
  const auto u3 = nth_state_poly(Sign::plus, 3);
  CHECK(apply_hamiltonian(u3) == scale(u3, i_times(Rational(-7, 2))));
}

TEST_CASE("nth states from both constructions") {
  CHECK(nth_state_ladder(Sign::plus, 0) == standard_state(Sign::plus));
  CHECK(nth_state_ladder(Sign::plus, 1) == fn(1, PolyC::monomial(kSqrt2, 1)));
  CHECK(nth_state_ladder(Sign::plus, 2) == fn(1, PolyC{ExactScalar(0, -1), ExactScalar(), ExactScalar(2)}));
  CHECK(nth_state_poly(Sign::plus, 1) == fn(1, PolyC::monomial(ExactScalar(2), 1)));
  CHECK(nth_state_poly(Sign::minus, 2) == fn(-1, PolyC{ExactScalar(0, 2), ExactScalar(), ExactScalar(4)}));
  const auto ratio = proportionality_scalar(nth_state_ladder(Sign::plus, 1), nth_state_poly(Sign::plus, 1));
  REQUIRE(ratio);
  CHECK(*ratio == ExactScalar::inv_sqrt2());
}

TEST_CASE("ladder and polynomial states differ by (1/sqrt2)^n") {
  for (const Sign s : {Sign::plus, Sign::minus}) {
    for (unsigned n = 0; n <= 12; ++n) {
      CAPTURE(n);
      const auto ratio = proportionality_scalar(nth_state_ladder(s, n), nth_state_poly(s, n));
      REQUIRE(ratio);
      CHECK_FALSE(ratio->is_zero());
      CHECK(*ratio == pow(ExactScalar::inv_sqrt2(), n));
    }
  }
}

TEST_CASE("proportionality_scalar") {
  const auto f = nth_state_poly(Sign::plus, 2);
  CHECK(proportionality_scalar(scale(f, ExactScalar(2)), f) == ExactScalar(2));
  CHECK(proportionality_scalar(PhasePolyFunction::zero(), f) == ExactScalar());
  CHECK_FALSE(proportionality_scalar(fn(1, PolyC::monomial(ExactScalar(1), 1)), standard_state(Sign::plus)));
  CHECK_FALSE(proportionality_scalar(standard_state(Sign::minus), standard_state(Sign::plus)));
  // Same degree and phase, different coefficient ratios.
  CHECK_FALSE(proportionality_scalar(fn(1, PolyC{ExactScalar(1), ExactScalar(1)}),
                                     fn(1, PolyC{ExactScalar(2), ExactScalar(1)})));
  CHECK_THROWS_AS(proportionality_scalar(f, PhasePolyFunction::zero()), std::domain_error);
}

TEST_CASE("eigen_check") {
  for (unsigned n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const Rational level(2 * static_cast<long>(n) + 1, 2);
    const auto plus = eigen_check(nth_state_ladder(Sign::plus, n), Observable::number);
    REQUIRE(plus.is_eigen());
    CHECK(*plus.eigenvalue == i_times(level));
    const auto minus_h = eigen_check(nth_state_poly(Sign::minus, n), Observable::hamiltonian);
    REQUIRE(minus_h.is_eigen());
    CHECK(*minus_h.eigenvalue == i_times(level));
    const auto plus_h = eigen_check(nth_state_ladder(Sign::plus, n), Observable::hamiltonian);
    REQUIRE(plus_h.is_eigen());
    CHECK(*plus_h.eigenvalue == i_times(-level));
  }
  // Not an eigenstate: u+0 + u+1 mixes levels.
  const auto mixed = add(nth_state_poly(Sign::plus, 0), nth_state_poly(Sign::plus, 1));
  CHECK_FALSE(eigen_check(mixed, Observable::number).is_eigen());
  CHECK_THROWS_AS(eigen_check(PhasePolyFunction::zero(), Observable::number), std::invalid_argument);
  // u+0 + u-0 is outside the type.
  CHECK_THROWS_AS(add(standard_state(Sign::plus), standard_state(Sign::minus)), std::invalid_argument);
}

TEST_CASE("parity") {
  const auto u0 = standard_state(Sign::plus);
  CHECK(parity(u0) == u0);
  const auto u1 = nth_state_poly(Sign::plus, 1);
  CHECK(parity(u1) == scale(u1, ExactScalar(-1)));
  for (const Sign s : {Sign::plus, Sign::minus})
    for (unsigned n = 0; n <= 12; ++n) {
      const auto u = nth_state_poly(s, n);
      CHECK(parity(u) == scale(u, ExactScalar(n % 2 == 0 ? 1 : -1)));
    }
}

TEST_CASE("time reversal") {
  CHECK(time_reverse(standard_state(Sign::plus)) == standard_state(Sign::minus));
  for (const Sign s : {Sign::plus, Sign::minus})
    for (unsigned n = 0; n <= 12; ++n) {
      CHECK(time_reverse(nth_state_poly(s, n)) == nth_state_poly(opposite(s), n));
      CHECK(time_reverse(nth_state_ladder(s, n)) == nth_state_ladder(opposite(s), n));
    }
}

TEST_CASE("symmetries are involutions and map the family into itself") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = tool::random_family_member(rng);
    CHECK(parity(parity(f)) == f);
    CHECK(time_reverse(time_reverse(f)) == f);
    if (f.is_zero()) continue;
    CHECK(parity(f).phase_rate() == f.phase_rate());
    CHECK(time_reverse(f).phase_rate() == -f.phase_rate());
    for (const Sign s : {Sign::plus, Sign::minus}) {
      const auto g = apply_ladder(s, f);
      CHECK((g.is_zero() || g.phase_rate() == f.phase_rate()));
    }
    const auto n = apply_number(f);
    CHECK((n.is_zero() || n.phase_rate() == f.phase_rate()));
  }
}

TEST_CASE("commutator [b+, b-] = -i on random family members") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = tool::random_family_member(rng);
    const auto bracket = sub(apply_ladder(Sign::plus, apply_ladder(Sign::minus, f)),
                             apply_ladder(Sign::minus, apply_ladder(Sign::plus, f)));
    CHECK(bracket == scale(f, ExactScalar(0, -1)));
  }
}

TEST_CASE("commutator_identity_check") {
  CHECK(commutator_identity_check(1, Sign::plus, standard_state(Sign::plus)));
  CHECK(commutator_identity_check(2, Sign::plus, standard_state(Sign::plus)));
  CHECK(commutator_identity_check(5, Sign::minus, PhasePolyFunction::zero()));
  // n = 2 on u+0 by hand: b- (b+)^2 u+0 = 2i b+ u+0, since b- u+0 = 0.
  const auto u0 = standard_state(Sign::plus);
  const auto twice = apply_ladder(Sign::plus, apply_ladder(Sign::plus, u0));
  CHECK(apply_ladder(Sign::minus, twice) == scale(apply_ladder(Sign::plus, u0), ExactScalar(0, 2)));
  for (const Sign s : {Sign::plus, Sign::minus})
    for (unsigned n = 1; n <= 8; ++n)
      for (const Sign probe : {Sign::plus, Sign::minus})
        for (unsigned k = 0; k <= 6; ++k) CHECK(commutator_identity_check(n, s, nth_state_poly(probe, k)));
  CHECK_THROWS_AS(commutator_identity_check(0, Sign::plus, u0), std::invalid_argument);
}

TEST_CASE("intertwining identity with shifted phase rates") {
  // (-+i d/dxi + xi) f = e^{-+i xi^2/2} (-+i d/dxi) e^{+-i xi^2/2} f
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = tool::random_family_member(rng);
    for (const Sign s : {Sign::plus, Sign::minus}) {
      const Rational shift(sign_value(s));
      const ExactScalar factor(0, -sign_value(s));
      const auto lhs = add(scale(differentiate(f), factor), PhasePolyFunction(f.phase_rate(), poly_shift(f.poly(), 1)));
      const auto rhs = shift_phase(scale(differentiate(shift_phase(f, shift)), factor), -shift);
      CHECK(lhs == rhs);
    }
  }
}
