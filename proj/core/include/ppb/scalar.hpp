#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ppb {

using Rational = mpq_class;

/// Element of Q(i, sqrt 2), stored as (a_re + i a_im) + (b_re + i b_im) sqrt 2.
///
/// Every component is kept in lowest terms, so two equal values always have
/// identical representations and `operator==` is exact structural equality.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(Rational re, Rational im = 0, Rational sqrt2_re = 0, Rational sqrt2_im = 0);

  static ExactScalar i();
  static ExactScalar sqrt2();
  static ExactScalar inv_sqrt2();

  const Rational& a_re() const { return a_re_; }
  const Rational& a_im() const { return a_im_; }
  const Rational& b_re() const { return b_re_; }
  const Rational& b_im() const { return b_im_; }

  bool is_zero() const;
  bool is_rational() const;  // a_im = b_re = b_im = 0

  ExactScalar& operator+=(const ExactScalar& y);
  ExactScalar& operator-=(const ExactScalar& y);
  ExactScalar& operator*=(const ExactScalar& y);
  ExactScalar& operator/=(const ExactScalar& y);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

  // Human-readable form, e.g. "1 - i/2 + (1/2)√2".
  std::string to_string() const;

 private:
  void canonicalize();

  Rational a_re_{0};
  Rational a_im_{0};
  Rational b_re_{0};
  Rational b_im_{0};
};

/// Throws std::domain_error for x == 0.
ExactScalar inverse(const ExactScalar& x);

/// Complex conjugation i -> -i; the sqrt 2 part is fixed.
ExactScalar conjugate(const ExactScalar& x);

/// Galois conjugation sqrt 2 -> -sqrt 2.
ExactScalar sqrt2_conjugate(const ExactScalar& x);

ExactScalar pow(ExactScalar base, unsigned exponent);

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "p/q", also for integers ("3/1").
std::string format_rational(const Rational& q);

/// Correctly rounded (round-to-nearest) conversion.
double to_double(const Rational& q);

std::complex<double> to_complex(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace ppb
