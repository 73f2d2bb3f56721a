#include "ppb/numeric.hpp"

#include <cmath>
#include <limits>

namespace ppb {

GridSpec::GridSpec(double xmin, double xmax, std::size_t points) : xmin_(xmin), xmax_(xmax), points_(points) {
  if (!(xmin < xmax)) throw std::invalid_argument("grid needs xmin < xmax");
  if (points < 3) throw std::invalid_argument("grid needs at least 3 points");
}

double GridSpec::node(std::size_t k) const {
  if (k + 1 == points_) return xmax_;
  return xmin_ + static_cast<double>(k) * step();
}

SampledFunction sample(const PhasePolyFunction& f, const GridSpec& grid) {
  std::vector<std::complex<double>> coeffs;
  for (const auto& c : f.poly().coeffs()) coeffs.push_back(to_complex(c));
  const double rate = to_double(f.phase_rate());

  SampledFunction out{grid, std::vector<std::complex<double>>(grid.points()), 0};
  for (std::size_t k = 0; k < grid.points(); ++k) {
    const double xi = grid.node(k);
    std::complex<double> p{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * xi + *it;
    out.values[k] = p * std::polar(1.0, rate * xi * xi / 2.0);
  }
  return out;
}

SampledFunction apply_hamiltonian_fd(const SampledFunction& s) {
  const std::size_t n = s.values.size();
  if (n < 2 * s.invalid_margin + 3) throw TooFewPoints("finite-difference Hamiltonian needs at least 3 valid points");
  const double h = s.grid.step();
  const double inv_h2 = 1.0 / (h * h);
  const std::complex<double> nan(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());

  SampledFunction out{s.grid, std::vector<std::complex<double>>(n, nan), s.invalid_margin + 1};
  for (std::size_t k = out.invalid_margin; k + out.invalid_margin < n; ++k) {
    const double xi = s.grid.node(k);
    const auto second = (s.values[k + 1] - 2.0 * s.values[k] + s.values[k - 1]) * inv_h2;
    out.values[k] = -0.5 * second - 0.5 * xi * xi * s.values[k];
  }
  return out;
}

double relative_l2_distance(const SampledFunction& a, const SampledFunction& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("samples on different grids");
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (!a.is_valid(k) || !b.is_valid(k)) continue;
    diff += std::norm(a.values[k] - b.values[k]);
    norm += std::norm(b.values[k]);
  }
  return std::sqrt(diff / norm);
}

double eigen_residual(Sign sign, unsigned n, const GridSpec& grid) {
  const auto psi = sample(nth_state_poly(sign, n), grid);
  const auto h_psi = apply_hamiltonian_fd(psi);
  const std::complex<double> energy(0.0, -sign_value(sign) * (n + 0.5));

  double residual = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < psi.values.size(); ++k) {
    if (!h_psi.is_valid(k)) continue;
    residual += std::norm(h_psi.values[k] - energy * psi.values[k]);
    norm += std::norm(psi.values[k]);
  }
  return std::sqrt(residual / norm);
}

}  // namespace ppb
