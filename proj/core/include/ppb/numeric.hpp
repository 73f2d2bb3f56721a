#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ppb/poly.hpp"
#include "ppb/states.hpp"

namespace ppb {

/// Uniform grid of `points` nodes on [xmin, xmax].
class GridSpec {
 public:
  /// Throws std::invalid_argument unless xmin < xmax and points >= 3.
  GridSpec(double xmin, double xmax, std::size_t points);

  /// [-4, 4] with 8193 nodes.
  static GridSpec standard() { return {-4.0, 4.0, 8193}; }

  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  std::size_t points() const { return points_; }
  double step() const { return (xmax_ - xmin_) / static_cast<double>(points_ - 1); }
  double node(std::size_t k) const;

  /// Same interval, half the spacing.
  GridSpec refined() const { return {xmin_, xmax_, 2 * (points_ - 1) + 1}; }

 private:
  double xmin_;
  double xmax_;
  std::size_t points_;
};

/// Complex samples on a grid. The first and last `invalid_margin` nodes carry
/// no meaningful value (NaN) and are excluded from norms.
struct SampledFunction {
  GridSpec grid;
  std::vector<std::complex<double>> values;
  std::size_t invalid_margin = 0;

  bool is_valid(std::size_t k) const { return k >= invalid_margin && k + invalid_margin < values.size(); }
};

class TooFewPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// P(xi) e^{i r xi^2 / 2} at every node.
SampledFunction sample(const PhasePolyFunction& f, const GridSpec& grid);

/// -1/2 d^2/dxi^2 - 1/2 xi^2 by central second differences. The endpoints
/// become invalid. Throws TooFewPoints when fewer than 3 valid nodes remain.
SampledFunction apply_hamiltonian_fd(const SampledFunction& s);

/// Relative L2 distance over nodes valid in both samples.
double relative_l2_distance(const SampledFunction& a, const SampledFunction& b);

/// ||(H_fd - E) psi|| / ||psi|| over interior nodes for psi = u^{+-}_n and
/// E = -+i (n + 1/2).
double eigen_residual(Sign sign, unsigned n, const GridSpec& grid);

}  // namespace ppb
