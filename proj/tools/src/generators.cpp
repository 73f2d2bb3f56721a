#include "ppb_tool/generators.hpp"

#include <vector>

namespace ppb::tool {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational random_rational(std::mt19937_64& rng, long max_abs, long max_den) {
  Rational q(uniform(rng, -max_abs, max_abs), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

Rational random_positive_rational(std::mt19937_64& rng, long max_num, long max_den) {
  Rational q(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

ExactScalar random_scalar(std::mt19937_64& rng) {
  // Leave components at zero now and then so sparse values get exercised.
  const auto part = [&] { return uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng); };
  return ExactScalar(part(), part(), part(), part());
}

PolyC random_poly(std::mt19937_64& rng, unsigned max_degree) {
  const auto degree = static_cast<std::size_t>(uniform(rng, 0, max_degree));
  std::vector<ExactScalar> coeffs;
  for (std::size_t k = 0; k <= degree; ++k) coeffs.push_back(random_scalar(rng));
  return PolyC(std::move(coeffs));
}

PhasePolyFunction random_family_member(std::mt19937_64& rng, unsigned max_degree) {
  return {Rational(uniform(rng, 0, 1) == 0 ? 1 : -1), random_poly(rng, max_degree)};
}

LinearObservable random_observable(std::mt19937_64& rng) { return {random_scalar(rng), random_scalar(rng)}; }

}  // namespace ppb::tool
