#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fdg/certification.hpp"
#include "fdg/special_fn.hpp"

namespace fdg::experiment {

/// Model problem on (-1, 1): kappa = 4/pi^2, u_0 = pi/4, homogeneous Dirichlet
/// data, dt = 1/N. Defaults give the nu = 3/4 study.
struct ConvergenceConfig {
  double nu = 0.75;
  std::vector<int> Ns = {80, 160, 320, 640, 1280};
  int M = 1000;
  double gamma = 3.0;
  std::vector<double> alphas = {0.6, 0.7, 0.8125};
  double t_end = 0.5;
  int half_nodes = 40;  // contour nodes per window for the reference solution
  int gauss_order = 5;

  /// Throws std::invalid_argument with a message naming the offending field.
  void validate() const;
};

struct ConvergenceResult {
  cert::ErrorTable table;
  std::vector<cert::ErrorCurve> curves;
};

/// Laplace transform in t of the exact solution,
///   u_hat(x, z) = (u0 / z) (1 - cosh(k x) / cosh(k)),  k = sqrt(z^nu / kappa),
/// evaluated without overflow for Re k > 0.
std::complex<double> reference_transform(double nu, double kappa, double u0, double x,
                                         std::complex<double> z);

/// Exact solution sampled at every point of `xs` for each time in `ts`
/// (result[i][j] = u(xs[j], ts[i])), by windowed contour inversion.
std::vector<std::vector<double>> reference_solution(double nu, std::span<const double> xs,
                                                   std::span<const double> ts,
                                                   int half_nodes = 40);

/// Progress hook: (stage description, fraction done in [0, 1]).
using Progress = std::function<void(const char*, double)>;

/// Fully discrete runs for every N against one shared reference solution.
ConvergenceResult run_convergence(const ConvergenceConfig& cfg, const Progress& progress = {});

/// Rate the analysis predicts for weight alpha with pi/4 data: min(1, alpha + nu/4).
double expected_rate(double nu, double alpha);

}  // namespace fdg::experiment
