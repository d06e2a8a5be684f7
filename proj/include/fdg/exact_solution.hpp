#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fdg/special_fn.hpp"

namespace fdg::exact {

/// Dirichlet eigenpairs of -(kappa u')' on (-1, 1):
///   lambda_m = kappa (m pi / 2)^2,  phi_m(x) = sin(m pi (x + 1) / 2),  m >= 1.
/// With kappa = 4/pi^2 the eigenvalues are m^2.
struct EigenSystem1D {
  double kappa = 4.0 / (3.14159265358979323846 * 3.14159265358979323846);

  double lambda(int m) const;
  double phi(int m, double x) const;
};

/// Fourier coefficients u_{0m} together with an envelope |u_{0m}| <= c m^{-p}
/// that bounds the truncated tail.
struct InitialData {
  std::function<double(int)> coefficient;
  double envelope_c = 1.0;
  double envelope_p = 1.0;

  /// u_0 = pi/4 on (-1, 1): u_{0m} = 1/m for odd m, 0 for even m.
  static InitialData constant_pi_over_4();
};

/// u0m E_nu(-lambda t^nu); t = 0 returns u0m.
double exact_mode(const special::FractionalOrder& ord, double lambda, double u0m, double t);

/// Number of modes needed so that the discarded L2 tail is below `tol`,
/// using E_nu(-s) <= min(1, 2/s).
int modes_for_tolerance(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                        const InitialData& data, double t, double tol);

/// u(x, t) = sum_m u_m(t) phi_m(x), truncated by `modes_for_tolerance`.
/// Throws std::invalid_argument for t <= 0.
std::vector<double> exact_field(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                                const InitialData& data, double t,
                                std::span<const double> x_points, double tol = 1e-8);

/// ||u(t)||_{L2} from the modal coefficients (Parseval), same truncation.
double exact_norm(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                  const InitialData& data, double t, double tol = 1e-8);

}  // namespace fdg::exact
