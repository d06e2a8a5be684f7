#pragma once

#include <span>
#include <vector>

#include "fdg/special_fn.hpp"

namespace fdg::cert {

/// delta^n(mu) = U^n - u(t_n) for the normalised mode (dt = 1, lambda = mu, u0m = 1).
/// mu = 0 gives 0 exactly.
double delta_direct(const special::FractionalOrder& ord, double mu, int n);

/// delta^1 .. delta^{n_max} from a single recurrence run (index n - 1 holds delta^n).
std::vector<double> delta_direct_all(const special::FractionalOrder& ord, double mu, int n_max);

/// delta^n(mu) from the real-axis representation built on the boundary values
/// of psi along the cut. Requires 0 < nu < 1, mu > 0, n >= 1. Throws
/// ConvergenceError if the quadrature misses `rel_tol`.
double delta_contour(const special::FractionalOrder& ord, double mu, int n,
                     double rel_tol = 1e-10);

/// mu = 2^j for j = j_min .. j_max.
std::vector<double> power_of_two_grid(int j_min, int j_max);

struct DeltaPoint {
  double mu;
  int n;
  double rho;    // mu n^nu
  double delta;
  double bound_ratio;  // |delta| / (n^{-1} min(rho^2, 1/rho))
};

struct BoundReport {
  double worst = 0.0;
  double mu_at = 0.0;
  int n_at = 0;
  std::vector<DeltaPoint> points;
};

/// Largest |delta^n(mu)| / [n^{-1} min(rho^2, rho^{-1})] over the grid, n = 1 .. n_max.
BoundReport bound_check(const special::FractionalOrder& ord, std::span<const double> mu_grid,
                        int n_max);

struct PhiReport {
  double phi1 = 0.0;  // sup over rho <= 1 of n^{1-2nu} mu^{-2} delta
  double phi2 = 0.0;  // sup over rho >= 1 of n^{1+nu} mu delta
  double min_delta = 0.0;
  int negative_points = 0;  // delta < -1e-12
  int guarded_points = 0;   // rho <= 1 points dropped as below the accuracy floor
  std::vector<DeltaPoint> points;
};

/// Suprema of the signed scaled errors. A point enters phi1 only if |delta|
/// exceeds ten times the estimated error of the Mittag-Leffler value.
PhiReport phi_sweep(const special::FractionalOrder& ord, std::span<const double> mu_grid,
                    int n_max);

/// int_0^inf (s^nu + s^{2nu} cos(pi nu)) / |s^nu + e^{i pi nu}|^4 ds for 1/2 < nu < 1
/// (zero in exact arithmetic).
double lemma_integral_zero(const special::FractionalOrder& ord);

/// x^nu int_x^1 s^{-3nu} ds for 0 < x <= 1 and x^{nu-1} int_1^x s^{1-3nu} ds for x >= 1,
/// in closed form with the logarithmic limits at nu = 1/3 and 2/3.
double power_integral_below(double nu, double x);
double power_integral_above(double nu, double x);

struct LemmaScan {
  double below_max = 0.0;         // nu in [0, 1/2], x in (0, 1]
  double above_max = 0.0;         // nu in [1/2, 1], x in [1, 1e6]
  double sector_ratio_max = 0.0;  // max |1 + X e^{i pi nu}|^{-2} (1-nu)^2 (1+X^2), must be <= 1
};

LemmaScan lemma_scan_bounds();

/// Numerical checks of the psi identities and asymptotics.
struct PsiChecks {
  double series_vs_integral = 0.0;  // max |difference| on a 20-point strip grid
  double periodicity = 0.0;         // max |psi(z + 2 pi i) - psi(z)| / |psi(z)|, Re z in [0.5, 5]
  double conjugate = 0.0;           // max |psi(conj z) - conj psi(z)| / |psi(z)|
  double small_z_ratio = 0.0;       // residual(|z| = 1e-2) / residual(|z| = 5e-3)
  double small_z_expected = 0.0;    // 2^{2 - nu}
  double min_re_psi_margin = 0.0;   // min of Re psi(x+iy) - 1/(2 Gamma(1+nu)), x >= 0, 0 < y < pi
  double min_psi_on_line = 0.0;     // min Re psi(x +- i pi) (the value is real there)
  double max_im_psi_on_line = 0.0;  // max |Im psi(x +- i pi)|
  double min_abs_one_plus_mu_psi = 0.0;  // at z = -1 + i pi/2, mu in [1e-3, 1e3]
};
PsiChecks psi_identity_checks(const special::FractionalOrder& ord);

/// E_N and rate per weight alpha for a doubling chain of runs.
struct ErrorCurve {
  int N = 0;
  std::vector<double> t;    // t_n, n = 1 ..
  std::vector<double> err;  // ||U^n - u(t_n)||
};

struct ErrorTable {
  std::vector<double> alphas;
  std::vector<int> Ns;
  std::vector<std::vector<double>> E;     // [N index][alpha index]
  std::vector<std::vector<double>> rate;  // log2(E_{N/2} / E_N); NaN for the first N
};

/// E_N = max over dt <= t_n <= t_end of t_n^alpha err_n. Throws
/// std::invalid_argument unless the N values double successively.
ErrorTable weighted_error_table(std::span<const ErrorCurve> curves,
                                std::span<const double> alphas, double t_end = 0.5);

/// Both sides of ||U^n - u(t_n)||^2 = sum_m (delta^n(lambda_m dt^nu) u_{0m})^2 for
/// the pi/4 data truncated to `modes`, dt = 1/N. The left side integrates the
/// reconstructed error field over (-1, 1); the right side uses delta_direct.
struct ParsevalCheck {
  double field_norm_sq;
  double modal_sum;
};
ParsevalCheck parseval_check(const special::FractionalOrder& ord, int modes, int N, int n);

}  // namespace fdg::cert
