#include "ppb/poly.hpp"

#include <algorithm>
#include <utility>

#include "mutation.hpp"
#include "ppb/states.hpp"

namespace ppb {

PolyC::PolyC(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyC::PolyC(std::initializer_list<ExactScalar> coeffs) : coeffs_(coeffs) { trim(); }

PolyC PolyC::constant(ExactScalar c) { return PolyC({std::move(c)}); }

PolyC PolyC::monomial(ExactScalar c, std::size_t degree) {
  std::vector<ExactScalar> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return PolyC(std::move(coeffs));
}

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactScalar PolyC::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExactScalar{}; }

ExactScalar PolyC::evaluate(const ExactScalar& xi) const {
  ExactScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

PolyC poly_add(const PolyC& p, const PolyC& q) {
  std::vector<ExactScalar> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) + q.coeff(k);
  return PolyC(std::move(out));
}

PolyC poly_sub(const PolyC& p, const PolyC& q) { return poly_add(p, poly_scale(q, ExactScalar(-1))); }

PolyC poly_mul(const PolyC& p, const PolyC& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<ExactScalar> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return PolyC(std::move(out));
}

PolyC poly_scale(const PolyC& p, const ExactScalar& c) {
  if (c.is_zero()) return {};
  std::vector<ExactScalar> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return PolyC(std::move(out));
}

PolyC poly_shift(const PolyC& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<ExactScalar> out(k);
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return PolyC(std::move(out));
}

PolyC poly_differentiate(const PolyC& p) {
  const auto a = p.coeffs();
  if (a.size() <= 1) return {};
  std::vector<ExactScalar> out(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * ExactScalar(static_cast<long>(k));
  return PolyC(std::move(out));
}

PolyC poly_reflect(const PolyC& p) {
  std::vector<ExactScalar> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return PolyC(std::move(out));
}

PolyC poly_conjugate(const PolyC& p) {
  std::vector<ExactScalar> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(conjugate(c));
  return PolyC(std::move(out));
}

PolyC hermite_ppb(Sign sign, unsigned n) {
  const long s = sign_value(sign);
  const ExactScalar xi_factor(detail::mutable_sign(detail::Mutation::recurrence_xi_term, 2));
  const ExactScalar derivative_factor = ExactScalar(0, detail::mutable_sign(detail::Mutation::recurrence_derivative_term, -s));
  PolyC h = PolyC::constant(1);
  for (unsigned k = 0; k < n; ++k) {
    h = poly_add(poly_shift(poly_scale(h, xi_factor), 1), poly_scale(poly_differentiate(h), derivative_factor));
  }
  return h;
}

PolyC hermite_ppb_rodrigues(Sign sign, unsigned n) {
  const long s = sign_value(sign);
  PhasePolyFunction f(Rational(2 * s), PolyC::constant(1));
  for (unsigned k = 0; k < n; ++k) f = differentiate(f);
  // Stripping e^{+-i xi^2} leaves f.poly(); the prefactor is (-+i)^n.
  return poly_scale(f.poly(), pow(ExactScalar(0, -s), n));
}

}  // namespace ppb
