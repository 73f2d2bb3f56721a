#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ppb/scalar.hpp"

namespace ppb {

/// Label of the two state families: `plus` carries e^{+i xi^2/2}, `minus` e^{-i xi^2/2}.
enum class Sign { plus, minus };

constexpr int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Dense polynomial in xi over ExactScalar. coeffs()[k] multiplies xi^k.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class PolyC {
 public:
  PolyC() = default;
  explicit PolyC(std::vector<ExactScalar> coeffs);
  PolyC(std::initializer_list<ExactScalar> coeffs);

  static PolyC constant(ExactScalar c);
  static PolyC monomial(ExactScalar c, std::size_t degree);

  std::span<const ExactScalar> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  ExactScalar coeff(std::size_t k) const;
  const ExactScalar& leading() const { return coeffs_.back(); }

  ExactScalar evaluate(const ExactScalar& xi) const;

  friend bool operator==(const PolyC&, const PolyC&) = default;

 private:
  void trim();

  std::vector<ExactScalar> coeffs_;
};

PolyC poly_add(const PolyC& p, const PolyC& q);
PolyC poly_sub(const PolyC& p, const PolyC& q);
PolyC poly_mul(const PolyC& p, const PolyC& q);
PolyC poly_scale(const PolyC& p, const ExactScalar& c);
/// p(xi) -> xi^k p(xi).
PolyC poly_shift(const PolyC& p, std::size_t k);
PolyC poly_differentiate(const PolyC& p);
/// p(xi) -> p(-xi).
PolyC poly_reflect(const PolyC& p);
/// Conjugates every coefficient.
PolyC poly_conjugate(const PolyC& p);

/// Barrier polynomial H^{+-}_n by the three-term rule
///   H_0 = 1,  H_{n+1} = 2 xi H_n -+ i H_n'.
/// Coefficients are Gaussian integers, degree n, leading coefficient 2^n.
PolyC hermite_ppb(Sign sign, unsigned n);

/// The same polynomial from its defining closed form
///   H^{+-}_n = (-+i)^n e^{-+i xi^2} d^n/dxi^n e^{+-i xi^2},
/// differentiating n times inside the phase-polynomial family at phase rate +-2.
/// Shares no code path with hermite_ppb beyond polynomial arithmetic.
PolyC hermite_ppb_rodrigues(Sign sign, unsigned n);

}  // namespace ppb
