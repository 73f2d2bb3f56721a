#include "ppb/scalar.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ppb {

ExactScalar::ExactScalar(long value) : a_re_(value) {}

ExactScalar::ExactScalar(Rational re, Rational im, Rational sqrt2_re, Rational sqrt2_im)
    : a_re_(std::move(re)), a_im_(std::move(im)), b_re_(std::move(sqrt2_re)), b_im_(std::move(sqrt2_im)) {
  canonicalize();
}

ExactScalar ExactScalar::i() { return ExactScalar(0, 1); }
ExactScalar ExactScalar::sqrt2() { return ExactScalar(0, 0, 1); }
ExactScalar ExactScalar::inv_sqrt2() { return ExactScalar(0, 0, Rational(1, 2)); }

void ExactScalar::canonicalize() {
  a_re_.canonicalize();
  a_im_.canonicalize();
  b_re_.canonicalize();
  b_im_.canonicalize();
}

bool ExactScalar::is_zero() const { return a_re_ == 0 && a_im_ == 0 && b_re_ == 0 && b_im_ == 0; }

bool ExactScalar::is_rational() const { return a_im_ == 0 && b_re_ == 0 && b_im_ == 0; }

ExactScalar& ExactScalar::operator+=(const ExactScalar& y) {
  a_re_ += y.a_re_;
  a_im_ += y.a_im_;
  b_re_ += y.b_re_;
  b_im_ += y.b_im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& y) {
  a_re_ -= y.a_re_;
  a_im_ -= y.a_im_;
  b_re_ -= y.b_re_;
  b_im_ -= y.b_im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& y) {
  // Write x = A + B sqrt2 with A, B Gaussian rationals, then
  // x y = (A A' + 2 B B') + (A B' + B A') sqrt2.
  const auto gauss_mul = [](const Rational& pr, const Rational& pi, const Rational& qr, const Rational& qi) {
    return std::pair<Rational, Rational>{pr * qr - pi * qi, pr * qi + pi * qr};
  };
  const auto [aa_re, aa_im] = gauss_mul(a_re_, a_im_, y.a_re_, y.a_im_);
  const auto [bb_re, bb_im] = gauss_mul(b_re_, b_im_, y.b_re_, y.b_im_);
  const auto [ab_re, ab_im] = gauss_mul(a_re_, a_im_, y.b_re_, y.b_im_);
  const auto [ba_re, ba_im] = gauss_mul(b_re_, b_im_, y.a_re_, y.a_im_);
  a_re_ = aa_re + 2 * bb_re;
  a_im_ = aa_im + 2 * bb_im;
  b_re_ = ab_re + ba_re;
  b_im_ = ab_im + ba_im;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& y) { return *this *= inverse(y); }

ExactScalar ExactScalar::operator-() const { return ExactScalar(-a_re_, -a_im_, -b_re_, -b_im_); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  return x.a_re_ == y.a_re_ && x.a_im_ == y.a_im_ && x.b_re_ == y.b_re_ && x.b_im_ == y.b_im_;
}

ExactScalar conjugate(const ExactScalar& x) { return ExactScalar(x.a_re(), -x.a_im(), x.b_re(), -x.b_im()); }

ExactScalar sqrt2_conjugate(const ExactScalar& x) { return ExactScalar(x.a_re(), x.a_im(), -x.b_re(), -x.b_im()); }

ExactScalar inverse(const ExactScalar& x) {
  if (x.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // x * sqrt2_conjugate(x) has no sqrt2 part; multiplying that by its complex
  // conjugate leaves a positive rational.
  const ExactScalar galois = sqrt2_conjugate(x);
  const ExactScalar gauss = x * galois;
  const ExactScalar norm = gauss * conjugate(gauss);
  const Rational scale = 1 / norm.a_re();
  return galois * conjugate(gauss) * ExactScalar(scale);
}

ExactScalar pow(ExactScalar base, unsigned exponent) {
  ExactScalar result(1);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("malformed rational: \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();
  const auto is_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false)) throw bad();
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("rational with zero denominator: \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

namespace {

// a + b sqrt2 evaluated at 256 bits and rounded once.
double eval_real_part(const Rational& a, const Rational& b) {
  if (b == 0) return to_double(a);
  mpfr_t acc, root;
  mpfr_init2(acc, 256);
  mpfr_init2(root, 256);
  mpfr_sqrt_ui(root, 2, MPFR_RNDN);
  mpfr_mul_q(root, root, b.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(acc, a.get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, root, MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(root);
  return out;
}

}  // namespace

std::complex<double> to_complex(const ExactScalar& x) {
  return {eval_real_part(x.a_re(), x.b_re()), eval_real_part(x.a_im(), x.b_im())};
}

std::string ExactScalar::to_string() const {
  struct Part {
    const Rational* value;
    const char* unit;
  };
  const std::vector<Part> parts{{&a_re_, ""}, {&a_im_, "i"}, {&b_re_, "√2"}, {&b_im_, "i√2"}};
  std::string out;
  for (const auto& [value, unit] : parts) {
    if (*value == 0) continue;
    const bool negative = *value < 0;
    const Rational magnitude = abs(*value);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string u(unit);
    if (u.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += u;
    } else if (magnitude.get_den() == 1) {
      out += magnitude.get_str() + u;
    } else if (magnitude.get_num() == 1 && u == "i") {
      out += "i/" + magnitude.get_den().get_str();
    } else {
      out += "(" + magnitude.get_str() + ")" + u;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

}  // namespace ppb
