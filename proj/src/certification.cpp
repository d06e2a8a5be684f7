#include "fdg/certification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "fdg/dg_stepper.hpp"
#include "fdg/errors.hpp"
#include "fdg/exact_solution.hpp"
#include "fdg/quadrature.hpp"

namespace fdg::cert {
namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

// documented absolute accuracy of mittag_leffler_neg
constexpr double ml_abs_error = 1e-14;

double scaled_bound(double rho, int n) { return std::min(rho * rho, 1.0 / rho) / n; }

// Below this s the boundary value of psi comes from its small-argument
// expansion; above it from the principal-value quadrature.
constexpr double small_s = 1e-6;

}  // namespace

double delta_direct(const special::FractionalOrder& ord, double mu, int n) {
  if (n < 1) throw std::invalid_argument("delta_direct: n must be >= 1");
  if (!(mu >= 0.0)) throw std::invalid_argument("delta_direct: mu must be >= 0");
  if (mu == 0.0) return 0.0;
  const auto u = dg::step_mode({ord, mu, 1.0}, {1.0, n});
  return u[n] - special::mittag_leffler_neg(ord, mu * std::pow(static_cast<double>(n), ord.nu()));
}

std::vector<double> delta_direct_all(const special::FractionalOrder& ord, double mu, int n_max) {
  if (n_max < 1) throw std::invalid_argument("delta_direct_all: n_max must be >= 1");
  if (!(mu >= 0.0)) throw std::invalid_argument("delta_direct_all: mu must be >= 0");
  std::vector<double> d(n_max, 0.0);
  if (mu == 0.0) return d;
  const auto u = dg::step_mode({ord, mu, 1.0}, {1.0, n_max});
  for (int n = 1; n <= n_max; ++n) {
    d[n - 1] = u[n] - special::mittag_leffler_neg(
                          ord, mu * std::pow(static_cast<double>(n), ord.nu()));
  }
  return d;
}

double delta_contour(const special::FractionalOrder& ord, double mu, int n, double rel_tol) {
  const double nu = ord.nu();
  if (!(nu < 1.0)) throw std::invalid_argument("delta_contour: requires nu < 1");
  if (!(mu > 0.0)) throw std::invalid_argument("delta_contour: mu must be positive");
  if (n < 1) throw std::invalid_argument("delta_contour: n must be >= 1");
  const cplx rot = std::polar(1.0, -pi * nu);  // e^{-i pi nu}
  const double zeta_term = ord.zeta_neg() / ord.gamma_1p();

  // e^{-ns} mu s^{-nu-1} (1/|A|^2 - 1/|B|^2) with B = 1 + mu s^{-nu} e^{-i pi nu},
  // A = 1 + mu psi_+(s) = B - mu D, D = s^{-nu} e^{-i pi nu} - psi_+(s). The
  // difference of squares is formed from D so nothing cancels when D is small.
  auto integrand = [&](double s) -> double {
    if (!(s > 1e-280)) return 0.0;
    const double sn = std::pow(s, -nu);
    const cplx lead = sn * rot;
    cplx d;
    if (s < small_s) {
      // D = -(1/2) z^{1-nu} - zeta(-nu) z / Gamma(1+nu) at z = s e^{i pi}
      d = -0.5 * std::pow(s, 1.0 - nu) * std::polar(1.0, pi * (1.0 - nu)) + zeta_term * s;
    } else {
      d = lead - special::psi_cut(ord, s, special::CutSide::upper);
    }
    const cplx b = 1.0 + mu * lead;
    const cplx a = b - mu * d;
    const double b2 = std::norm(b);
    const double a2 = std::norm(a);
    const double diff = 2.0 * mu * (std::conj(b) * d).real() - mu * mu * std::norm(d);
    // grouped so nothing overflows as s -> 0
    return std::exp(-n * s) * ((mu * sn / a2) * (diff / b2)) / s;
  };

  const double s_end = 1.0 + 46.0 / n;
  std::vector<double> breaks = {small_s, 1.0 / n, std::pow(mu, 1.0 / nu), 1.0, s_end};
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  double lo = 0.0;
  for (double b : breaks) {
    const double hi = std::min(b, s_end);
    if (hi > lo) {
      total += quad::finite(integrand, lo, hi, rel_tol).value;
      lo = hi;
    }
  }
  return std::sin(pi * nu) / pi * total;
}

std::vector<double> power_of_two_grid(int j_min, int j_max) {
  if (j_max < j_min) throw std::invalid_argument("power_of_two_grid: empty range");
  std::vector<double> g;
  for (int j = j_min; j <= j_max; ++j) g.push_back(std::ldexp(1.0, j));
  return g;
}

BoundReport bound_check(const special::FractionalOrder& ord, std::span<const double> mu_grid,
                        int n_max) {
  if (mu_grid.empty() || n_max < 1) throw std::invalid_argument("bound_check: empty grid");
  BoundReport r;
  for (double mu : mu_grid) {
    if (!(mu > 0.0)) throw std::invalid_argument("bound_check: mu must be positive");
    const auto d = delta_direct_all(ord, mu, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const double rho = mu * std::pow(static_cast<double>(n), ord.nu());
      const double ratio = std::abs(d[n - 1]) / scaled_bound(rho, n);
      r.points.push_back({mu, n, rho, d[n - 1], ratio});
      if (ratio > r.worst) {
        r.worst = ratio;
        r.mu_at = mu;
        r.n_at = n;
      }
    }
  }
  return r;
}

PhiReport phi_sweep(const special::FractionalOrder& ord, std::span<const double> mu_grid,
                    int n_max) {
  if (mu_grid.empty() || n_max < 1) throw std::invalid_argument("phi_sweep: empty grid");
  PhiReport r;
  r.min_delta = std::numeric_limits<double>::infinity();
  const double eps = std::numeric_limits<double>::epsilon();
  for (double mu : mu_grid) {
    if (!(mu > 0.0)) throw std::invalid_argument("phi_sweep: mu must be positive");
    const auto d = delta_direct_all(ord, mu, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const double delta = d[n - 1];
      const double rho = mu * std::pow(static_cast<double>(n), ord.nu());
      r.points.push_back({mu, n, rho, delta, std::abs(delta) / scaled_bound(rho, n)});
      r.min_delta = std::min(r.min_delta, delta);
      if (delta < -1e-12) ++r.negative_points;
      if (rho <= 1.0) {
        const double floor = ml_abs_error + n * eps;
        if (std::abs(delta) > 10.0 * floor) {
          r.phi1 = std::max(r.phi1, delta * n / (rho * rho));
        } else {
          ++r.guarded_points;
        }
      }
      if (rho >= 1.0) r.phi2 = std::max(r.phi2, delta * n * rho);
    }
  }
  return r;
}

double lemma_integral_zero(const special::FractionalOrder& ord) {
  const double nu = ord.nu();
  if (!(nu > 0.5 && nu < 1.0)) {
    throw std::invalid_argument("lemma_integral_zero: requires 1/2 < nu < 1");
  }
  const double c = std::cos(pi * nu);
  // with x = s^nu: (x + c x^2) / (x^2 + 2 c x + 1)^2 * x^{1/nu - 1} / nu
  auto g = [=](double x) {
    const double q = x * x + 2.0 * c * x + 1.0;
    return (x + c * x * x) / (q * q) * std::pow(x, 1.0 / nu - 1.0) / nu;
  };
  const double inner = quad::finite(g, 0.0, 1.0, 1e-14).value;
  // [1, inf): x = 1/u, then u = v^p with p = 1/(2 - 1/nu); the Jacobian
  // cancels the u^{1 - 1/nu} singularity exactly
  const double p = 1.0 / (2.0 - 1.0 / nu);
  auto h = [=](double v) {
    const double u = std::pow(v, p);
    const double q = 1.0 + 2.0 * c * u + u * u;
    return (u + c) / (q * q) * p / nu;
  };
  const double outer = quad::finite(h, 0.0, 1.0, 1e-14).value;
  return inner + outer;
}

double power_integral_below(double nu, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("power_integral_below: x must lie in (0, 1]");
  const double a = 1.0 - 3.0 * nu;
  const double lx = std::log(x);
  // (1 - x^a) / a, tending to -log x as a -> 0
  const double integral = (a == 0.0) ? -lx : -std::expm1(a * lx) / a;
  return std::pow(x, nu) * integral;
}

double power_integral_above(double nu, double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("power_integral_above: x must be >= 1");
  const double b = 2.0 - 3.0 * nu;
  const double lx = std::log(x);
  const double integral = (b == 0.0) ? lx : std::expm1(b * lx) / b;
  return std::pow(x, nu - 1.0) * integral;
}

LemmaScan lemma_scan_bounds() {
  LemmaScan r;
  constexpr int nu_steps = 200;
  constexpr int x_steps = 4000;
  for (int i = 0; i <= nu_steps; ++i) {
    const double nu5 = 0.5 * i / nu_steps;
    const double nu6 = 0.5 + 0.5 * i / nu_steps;
    for (int k = 0; k <= x_steps; ++k) {
      // x over (1e-12, 1] and [1, 1e6], log spaced
      const double x5 = std::pow(10.0, -12.0 * (1.0 - static_cast<double>(k) / x_steps));
      const double x6 = std::pow(10.0, 6.0 * k / x_steps);
      r.below_max = std::max(r.below_max, power_integral_below(nu5, x5));
      r.above_max = std::max(r.above_max, power_integral_above(nu6, x6));
    }
  }
  for (int i = 1; i <= 9; ++i) {
    const double nu = 0.1 * i;
    const double c = std::cos(pi * nu);
    for (int k = 0; k <= x_steps; ++k) {
      const double X = (k == 0) ? 0.0 : std::pow(10.0, -6.0 + 10.0 * k / x_steps);
      const double mod2 = 1.0 + 2.0 * X * c + X * X;
      const double ratio = (1.0 - nu) * (1.0 - nu) * (1.0 + X * X) / mod2;
      r.sector_ratio_max = std::max(r.sector_ratio_max, ratio);
    }
  }
  return r;
}

PsiChecks psi_identity_checks(const special::FractionalOrder& ord) {
  PsiChecks c;
  const double top = pi - 0.1;
  for (double x : {0.2, 0.8, 1.5, 2.2, 3.0}) {
    for (double y : {-top, -1.0, 1.0, top}) {
      const cplx z(x, y);
      const cplx a = special::psi_series(ord, z);
      c.series_vs_integral = std::max(c.series_vs_integral, std::abs(a - special::psi_integral(ord, z)));
      c.conjugate = std::max(c.conjugate,
                             std::abs(special::psi_series(ord, std::conj(z)) - std::conj(a)) /
                                 std::abs(a));
    }
  }
  for (double x : {0.5, 1.0, 2.0, 3.5, 5.0}) {
    for (double y : {-2.0, 0.0, 1.0, 3.0}) {
      const cplx z(x, y);
      const cplx a = special::psi_series(ord, z);
      const cplx b = special::psi_series(ord, z + cplx(0.0, 2.0 * pi));
      c.periodicity = std::max(c.periodicity, std::abs(b - a) / std::abs(a));
    }
  }
  auto residual = [&](double r) {
    const cplx z = std::polar(r, pi / 4.0);
    return std::abs(special::psi_integral(ord, z) - special::psi_asym_small(ord, z));
  };
  c.small_z_ratio = residual(1e-2) / residual(5e-3);
  c.small_z_expected = std::pow(2.0, 2.0 - ord.nu());
  c.min_re_psi_margin = std::numeric_limits<double>::infinity();
  const double floor = 0.5 / ord.gamma_1p();
  for (double x : {0.0, 0.05, 0.5, 2.0, 8.0}) {
    for (double y : {0.05, 0.5, 1.5, 2.5, pi - 0.05}) {
      const cplx z(x, y);
      const cplx v = (x > 0.0) ? special::psi_series(ord, z) : special::psi_integral(ord, z);
      c.min_re_psi_margin = std::min(c.min_re_psi_margin, v.real() - floor);
    }
  }
  c.min_psi_on_line = std::numeric_limits<double>::infinity();
  for (double x : {-3.0, -1.0, -0.2, 0.3, 2.0}) {
    for (double sign : {1.0, -1.0}) {
      const cplx v = special::psi_integral(ord, cplx(x, sign * pi));
      c.min_psi_on_line = std::min(c.min_psi_on_line, v.real());
      c.max_im_psi_on_line = std::max(c.max_im_psi_on_line, std::abs(v.imag()));
    }
  }
  const cplx p = special::psi_integral(ord, cplx(-1.0, 0.5 * pi));
  c.min_abs_one_plus_mu_psi = std::numeric_limits<double>::infinity();
  for (int k = -30; k <= 30; ++k) {
    const double mu = std::pow(10.0, 0.1 * k);
    c.min_abs_one_plus_mu_psi = std::min(c.min_abs_one_plus_mu_psi, std::abs(1.0 + mu * p));
  }
  return c;
}

ErrorTable weighted_error_table(std::span<const ErrorCurve> curves,
                                std::span<const double> alphas, double t_end) {
  if (curves.empty() || alphas.empty()) {
    throw std::invalid_argument("weighted_error_table: no runs or no weights");
  }
  ErrorTable tab;
  tab.alphas.assign(alphas.begin(), alphas.end());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const ErrorCurve& c = curves[i];
    if (i > 0 && c.N != 2 * curves[i - 1].N) {
      throw std::invalid_argument("weighted_error_table: N values must double, got " +
                                  std::to_string(curves[i - 1].N) + " then " +
                                  std::to_string(c.N));
    }
    if (c.t.size() != c.err.size() || c.t.empty()) {
      throw std::invalid_argument("weighted_error_table: malformed error curve");
    }
    tab.Ns.push_back(c.N);
    std::vector<double> e(alphas.size(), 0.0);
    for (std::size_t k = 0; k < c.t.size(); ++k) {
      if (c.t[k] > t_end * (1.0 + 1e-12)) continue;
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        e[a] = std::max(e[a], std::pow(c.t[k], alphas[a]) * c.err[k]);
      }
    }
    std::vector<double> r(alphas.size(), std::numeric_limits<double>::quiet_NaN());
    if (i > 0) {
      for (std::size_t a = 0; a < alphas.size(); ++a) r[a] = std::log2(tab.E.back()[a] / e[a]);
    }
    tab.E.push_back(std::move(e));
    tab.rate.push_back(std::move(r));
  }
  return tab;
}

ParsevalCheck parseval_check(const special::FractionalOrder& ord, int modes, int N, int n) {
  if (modes < 1 || N < 1 || n < 1 || n > N) {
    throw std::invalid_argument("parseval_check: need modes >= 1 and 1 <= n <= N");
  }
  const exact::EigenSystem1D sys;
  const auto data = exact::InitialData::constant_pi_over_4();
  const dg::TimeGrid grid{1.0 / N, n};
  std::vector<double> lam(modes), u0(modes);
  for (int m = 1; m <= modes; ++m) {
    lam[m - 1] = sys.lambda(m);
    u0[m - 1] = data.coefficient(m);
  }
  const auto traj = dg::step_spectral(ord, lam, u0, grid);
  const double tn = grid.t(n);
  std::vector<double> err(modes);
  double modal = 0.0;
  for (int m = 0; m < modes; ++m) {
    err[m] = traj[m][n] - exact::exact_mode(ord, lam[m], u0[m], tn);
    const double d = delta_direct(ord, lam[m] * std::pow(grid.dt, ord.nu()), n) * u0[m];
    modal += d * d;
  }
  // composite Gauss-Legendre, exact for the trigonometric polynomial squared
  using G = boost::math::quadrature::gauss<double, 10>;
  const int panels = std::max(16, 2 * modes);
  double field = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = -1.0 + 2.0 * p / panels;
    const double b = a + 2.0 / panels;
    field += G::integrate(
        [&](double x) {
          double e = 0.0;
          for (int m = 0; m < modes; ++m) e += err[m] * sys.phi(m + 1, x);
          return e * e;
        },
        a, b);
  }
  return {field, modal};
}

}  // namespace fdg::cert
