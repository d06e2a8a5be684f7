#include "fdg/exact_solution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fdg::exact {
namespace {

constexpr double pi = std::numbers::pi;

// Upper bound for sum_{m > M} c^2 m^{-2p} (2 / lambda_m t^nu)^2, valid once
// lambda_{M+1} t^nu >= 2 so that the min(1, 2/s) cap is inactive.
double tail_bound(const EigenSystem1D& sys, const InitialData& data, double tnu, int M) {
  const double lam = sys.lambda(M + 1);
  if (lam * tnu < 2.0) return std::numeric_limits<double>::infinity();
  const double k = sys.kappa * pi * pi / 4.0;  // lambda_m = k m^2
  const double q = 2.0 * data.envelope_p + 4.0;
  const double c2 = data.envelope_c * data.envelope_c * 4.0 / (k * k * tnu * tnu);
  // sum_{m>M} m^{-q} <= int_M^inf x^{-q} dx
  return c2 * std::pow(static_cast<double>(M), 1.0 - q) / (q - 1.0);
}

}  // namespace

double EigenSystem1D::lambda(int m) const {
  if (m < 1) throw std::invalid_argument("EigenSystem1D: mode index must be >= 1");
  const double k = 0.5 * m * pi;
  return kappa * k * k;
}

double EigenSystem1D::phi(int m, double x) const {
  if (m < 1) throw std::invalid_argument("EigenSystem1D: mode index must be >= 1");
  return std::sin(0.5 * m * pi * (x + 1.0));
}

InitialData InitialData::constant_pi_over_4() {
  InitialData d;
  d.coefficient = [](int m) { return (m % 2 == 1) ? 1.0 / m : 0.0; };
  d.envelope_c = 1.0;
  d.envelope_p = 1.0;
  return d;
}

double exact_mode(const special::FractionalOrder& ord, double lambda, double u0m, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("exact_mode: t must be >= 0");
  if (!(lambda >= 0.0)) throw std::invalid_argument("exact_mode: lambda must be >= 0");
  if (t == 0.0 || lambda == 0.0) return u0m;
  return u0m * special::mittag_leffler_neg(ord, lambda * std::pow(t, ord.nu()));
}

int modes_for_tolerance(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                        const InitialData& data, double t, double tol) {
  if (!(t > 0.0)) throw std::invalid_argument("exact_field: t must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("exact_field: tol must be positive");
  const double tnu = std::pow(t, ord.nu());
  const double target = tol * tol;
  int hi = 1;
  while (!(tail_bound(sys, data, tnu, hi) < target)) {
    if (hi > (1 << 26)) throw std::invalid_argument("exact_field: t too small for tolerance");
    hi *= 2;
  }
  int lo = hi / 2;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (tail_bound(sys, data, tnu, mid) < target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<double> exact_field(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                                const InitialData& data, double t,
                                std::span<const double> x_points, double tol) {
  const int modes = modes_for_tolerance(ord, sys, data, t, tol);
  std::vector<double> u(x_points.size(), 0.0);
  for (int m = 1; m <= modes; ++m) {
    const double c = data.coefficient(m);
    if (c == 0.0) continue;
    const double um = exact_mode(ord, sys.lambda(m), c, t);
    for (std::size_t i = 0; i < x_points.size(); ++i) u[i] += um * sys.phi(m, x_points[i]);
  }
  return u;
}

double exact_norm(const special::FractionalOrder& ord, const EigenSystem1D& sys,
                  const InitialData& data, double t, double tol) {
  const int modes = modes_for_tolerance(ord, sys, data, t, tol);
  double s = 0.0;
  for (int m = 1; m <= modes; ++m) {
    const double c = data.coefficient(m);
    if (c == 0.0) continue;
    const double um = exact_mode(ord, sys.lambda(m), c, t);
    s += um * um;
  }
  return std::sqrt(s);
}

}  // namespace fdg::exact
