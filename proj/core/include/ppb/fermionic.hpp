#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "ppb/scalar.hpp"

namespace ppb {

/// 2x2 matrix over ExactScalar, row-major.
struct Matrix2 {
  std::array<ExactScalar, 4> entries{};

  static Matrix2 identity();
  static Matrix2 zero() { return {}; }
  static Matrix2 diagonal(ExactScalar a, ExactScalar d);

  const ExactScalar& operator()(int row, int col) const { return entries[static_cast<std::size_t>(2 * row + col)]; }
  ExactScalar trace() const { return entries[0] + entries[3]; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 mat_add(const Matrix2& a, const Matrix2& b);
Matrix2 mat_sub(const Matrix2& a, const Matrix2& b);
Matrix2 mat_mul(const Matrix2& a, const Matrix2& b);
Matrix2 mat_scale(const Matrix2& a, const ExactScalar& c);

Matrix2 commutator(const Matrix2& a, const Matrix2& b);
Matrix2 anticommutator(const Matrix2& a, const Matrix2& b);

// Minimal realization of {d+, d-} = 1, {d+, d+} = {d-, d-} = 0.
Matrix2 d_plus();   // [[0, 1], [0, 0]]
Matrix2 d_minus();  // [[0, 0], [1, 0]]

/// (i/2) [d+, d-] = diag(i/2, -i/2).
Matrix2 fermionic_number();

class NotTriangular : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Diagonal of a triangular matrix. Throws NotTriangular when both
/// off-diagonal entries are nonzero.
std::pair<ExactScalar, ExactScalar> eigenvalues_triangular(const Matrix2& m);

}  // namespace ppb
