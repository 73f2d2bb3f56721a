#pragma once

#include <random>

#include "ppb/heisenberg.hpp"
#include "ppb/poly.hpp"
#include "ppb/scalar.hpp"
#include "ppb/states.hpp"

namespace ppb::tool {

// Random exact values for property checks. All draws are small so products
// stay cheap; reproducibility comes from the caller's seeded engine.

Rational random_rational(std::mt19937_64& rng, long max_abs = 9, long max_den = 6);
Rational random_positive_rational(std::mt19937_64& rng, long max_num = 12, long max_den = 12);
ExactScalar random_scalar(std::mt19937_64& rng);
PolyC random_poly(std::mt19937_64& rng, unsigned max_degree = 6);
/// Member with phase rate +1 or -1 (possibly the zero function).
PhasePolyFunction random_family_member(std::mt19937_64& rng, unsigned max_degree = 6);
LinearObservable random_observable(std::mt19937_64& rng);

}  // namespace ppb::tool
