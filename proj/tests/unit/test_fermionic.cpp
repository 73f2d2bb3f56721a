#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppb/fermionic.hpp"

using namespace ppb;

namespace {

const ExactScalar kHalfI(0, Rational(1, 2));

}  // namespace

TEST_CASE("matrix arithmetic") {
  const auto id = Matrix2::identity();
  CHECK(mat_mul(id, id) == id);
  CHECK(mat_mul(d_plus(), d_plus()) == Matrix2::zero());
  CHECK(mat_mul(d_minus(), d_minus()) == Matrix2::zero());
  CHECK(mat_add(mat_mul(d_plus(), d_minus()), mat_mul(d_minus(), d_plus())) == id);
  const Matrix2 m{{ExactScalar(1), ExactScalar(2), ExactScalar(3), ExactScalar(4)}};
  // Direct multiplication: [[1,2],[3,4]]^2 = [[7,10],[15,22]].
  CHECK(mat_mul(m, m) == Matrix2{{ExactScalar(7), ExactScalar(10), ExactScalar(15), ExactScalar(22)}});
  CHECK(mat_scale(m, ExactScalar(0)) == Matrix2::zero());
  CHECK(mat_sub(m, m) == Matrix2::zero());
  CHECK(m.trace() == ExactScalar(5));
}

TEST_CASE("anticommutation relations") {
  CHECK(anticommutator(d_plus(), d_minus()) == Matrix2::identity());
  CHECK(anticommutator(d_plus(), d_plus()) == Matrix2::zero());
  CHECK(anticommutator(d_minus(), d_minus()) == Matrix2::zero());
  CHECK(commutator(d_plus(), d_minus()) == Matrix2::diagonal(ExactScalar(1), ExactScalar(-1)));
}

TEST_CASE("number operator") {
  const auto n = fermionic_number();
  CHECK(n == Matrix2::diagonal(kHalfI, -kHalfI));
  CHECK(n.trace().is_zero());
  CHECK(mat_mul(n, n) == mat_scale(Matrix2::identity(), ExactScalar(Rational(-1, 4))));
  const auto [e0, e1] = eigenvalues_triangular(n);
  CHECK(e0 == kHalfI);
  CHECK(e1 == -kHalfI);
  // Mirror of [N, b+-] = +-i b+-.
  CHECK(commutator(n, d_plus()) == mat_scale(d_plus(), ExactScalar::i()));
  CHECK(commutator(n, d_minus()) == mat_scale(d_minus(), ExactScalar(0, -1)));
}

TEST_CASE("eigenvalues_triangular") {
  const auto [a, b] = eigenvalues_triangular(Matrix2{{ExactScalar(1), ExactScalar(5), ExactScalar(0), ExactScalar(2)}});
  CHECK(a == ExactScalar(1));
  CHECK(b == ExactScalar(2));
  const auto [c, d] = eigenvalues_triangular(d_minus());
  CHECK(c.is_zero());
  CHECK(d.is_zero());
  CHECK_THROWS_AS(eigenvalues_triangular(Matrix2{{ExactScalar(0), ExactScalar(1), ExactScalar(1), ExactScalar(0)}}),
                  NotTriangular);
}
