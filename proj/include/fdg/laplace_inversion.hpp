#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fdg/special_fn.hpp"

namespace fdg::laplace {

using cplx = std::complex<double>;
using Transform = std::function<cplx(cplx)>;

/// Hyperbolic contour z(u) = scale * (1 + sin(i u - angle)) sampled with the
/// trapezoidal rule at u_k = k * step, |k| <= half_nodes.
///
/// The transform must be analytic off the cut (-inf, 0]. Parameters built by
/// `for_window` balance the discretisation error on both sides of the strip
/// of analyticity against truncation, uniformly for t in [t_min, t_max].
/// With 40 node pairs a ratio-50 window is good to about 1e-12 relative to
/// the size of f; 80 pairs reach round-off.
struct ContourSpec {
  int half_nodes = 0;
  double scale = 0.0;  // contour vertex sits at scale * (1 - sin(angle))
  double angle = 0.0;  // in (0, pi/2); the asymptotes open at pi/2 + angle
  double step = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;

  int node_count() const noexcept { return 2 * half_nodes + 1; }

  /// Throws std::invalid_argument unless node_count is odd and >= 9, the
  /// shape parameters are in range and 0 < t_min <= t_max.
  void validate() const;

  /// Tuned parameters for the window [t_min, t_max]; the ratio must not
  /// exceed `max_window_ratio`.
  static ContourSpec for_window(int half_nodes, double t_min, double t_max);
};

inline constexpr double max_window_ratio = 50.0;
inline constexpr int default_half_nodes = 40;

/// Contour nodes and trapezoidal weights, reusable for any transform and any
/// t inside the window. Only the upper half (k >= 0) is stored: the
/// integrand is conjugate-symmetric so the result is
///   f(t) = Im sum_k weight_k e^{z_k t} F(z_k).
class ContourRule {
 public:
  explicit ContourRule(const ContourSpec& spec);

  const ContourSpec& spec() const noexcept { return spec_; }
  std::span<const cplx> nodes() const noexcept { return nodes_; }
  std::span<const cplx> weights() const noexcept { return weights_; }

  /// Combines transform values sampled at `nodes()` into f(t).
  double combine(std::span<const cplx> transform_at_nodes, double t) const;

  /// e^{z_k t} * weight_k for every node, so several transforms can share it.
  std::vector<cplx> kernel(double t) const;

 private:
  ContourSpec spec_;
  std::vector<cplx> nodes_;
  std::vector<cplx> weights_;
};

/// (1 / 2 pi i) int e^{zt} F(z) dz along the contour. Throws
/// std::invalid_argument if t lies outside the spec's window.
double invert(const Transform& transform, double t, const ContourSpec& spec);

/// Inverts on a window of ratio 1 around t, doubling the node count until two
/// successive answers agree to `tol`. Throws ConvergenceError (carrying the
/// achieved self-difference) if round-off stalls progress first.
double invert_converged(const Transform& transform, double t, double tol = 1e-12);

/// u_m(t) = u0m * E_nu(-lambda t^nu) from the transform u0m / (z + lambda z^{1-nu}).
/// lambda = 0 returns u0m without quadrature.
double reference_mode(const special::FractionalOrder& ord, double lambda, double u0m, double t,
                      const ContourSpec& spec);

/// Splits [t_min, t_max] into geometric windows of ratio <= max_window_ratio.
std::vector<ContourSpec> window_specs(int half_nodes, double t_min, double t_max);

}  // namespace fdg::laplace
