#include "ppb/fermionic.hpp"

namespace ppb {

Matrix2 Matrix2::identity() { return diagonal(ExactScalar(1), ExactScalar(1)); }

Matrix2 Matrix2::diagonal(ExactScalar a, ExactScalar d) { return {{std::move(a), {}, {}, std::move(d)}}; }

Matrix2 mat_add(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (std::size_t k = 0; k < 4; ++k) out.entries[k] = a.entries[k] + b.entries[k];
  return out;
}

Matrix2 mat_sub(const Matrix2& a, const Matrix2& b) { return mat_add(a, mat_scale(b, ExactScalar(-1))); }

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.entries[static_cast<std::size_t>(2 * r + c)] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Matrix2 mat_scale(const Matrix2& a, const ExactScalar& c) {
  Matrix2 out = a;
  for (auto& e : out.entries) e *= c;
  return out;
}

Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

Matrix2 anticommutator(const Matrix2& a, const Matrix2& b) { return mat_add(mat_mul(a, b), mat_mul(b, a)); }

Matrix2 d_plus() { return {{ExactScalar(0), ExactScalar(1), ExactScalar(0), ExactScalar(0)}}; }

Matrix2 d_minus() { return {{ExactScalar(0), ExactScalar(0), ExactScalar(1), ExactScalar(0)}}; }

Matrix2 fermionic_number() {
  return mat_scale(commutator(d_plus(), d_minus()), ExactScalar(0, Rational(1, 2)));
}

std::pair<ExactScalar, ExactScalar> eigenvalues_triangular(const Matrix2& m) {
  if (!m(0, 1).is_zero() && !m(1, 0).is_zero())
    throw NotTriangular("exact eigenvalues are only extracted from triangular 2x2 matrices");
  return {m(0, 0), m(1, 1)};
}

}  // namespace ppb
