#pragma once

#include <complex>

namespace fdg::special {

using cplx = std::complex<double>;

/// Fractional exponent nu in (0, 1] together with the constants the scheme
/// and its analysis keep asking for.
class FractionalOrder {
 public:
  /// Throws std::invalid_argument unless 0 < nu <= 1.
  explicit FractionalOrder(double nu);

  double nu() const noexcept { return nu_; }
  /// Gamma(1 + nu).
  double gamma_1p() const noexcept { return gamma_1p_; }
  /// zeta(-nu).
  double zeta_neg() const noexcept { return zeta_neg_; }
  bool classical() const noexcept { return nu_ == 1.0; }

 private:
  double nu_;
  double gamma_1p_;
  double zeta_neg_;
};

enum class CutSide { upper, lower };

/// Gamma function. Negative non-integer arguments go through reflection;
/// non-positive integers throw std::domain_error.
double gamma(double x);

/// 1/Gamma(x), finite everywhere (zero at the poles of Gamma).
double rgamma(double x);

/// zeta(-nu) for 0 < nu <= 1 via the functional equation and an
/// Euler-Maclaurin evaluation of zeta(1 + nu).
double zeta_neg(double nu);
inline double zeta_neg(const FractionalOrder& ord) { return ord.zeta_neg(); }

/// Mittag-Leffler function E_nu(-s) for s >= 0.
///
/// Three regimes: the Taylor series for s <= 1, the asymptotic series
/// sum_{k>=1} (-1)^{k+1} s^{-k} / Gamma(1 - nu k) once its smallest term is
/// negligible, and in between the real-line representation
///   E_nu(-s) = sin(pi nu)/(pi nu) * int_0^inf exp(-(s x)^{1/nu}) / (x^2 + 2 x cos(pi nu) + 1) dx.
/// Absolute accuracy is about 1e-14.
double mittag_leffler_neg(const FractionalOrder& ord, double s);

/// Which branch `mittag_leffler_neg` takes for a given s (exposed for tests).
enum class MittagLefflerRegime { exact, taylor, asymptotic, real_line };
MittagLefflerRegime mittag_leffler_regime(const FractionalOrder& ord, double s);

/// psi(z) = (1/Gamma(1+nu)) (1 + sum_{n>=1} [(n+1)^nu - n^nu] e^{-nz}) for Re z > 0.
/// Throws std::domain_error for Re z <= 0.
cplx psi_series(const FractionalOrder& ord, cplx z);

/// psi(z) from the real-line integral
///   (sin(pi nu)/pi) int_0^inf s^{-nu} / (1 - e^{-z-s}) * (1 - e^{-s}) / s ds,
/// valid for |Im z| <= pi, z off (-inf, 0]. Requires nu < 1 (for nu = 1 the
/// closed form 1/(1 - e^{-z}) is returned).
cplx psi_integral(const FractionalOrder& ord, cplx z);

/// Boundary values psi(s e^{+-i pi}) on either side of the cut. The imaginary
/// part is the closed form -+(1 - e^{-s}) s^{-nu-1} sin(pi nu); the real part
/// is a principal-value integral with the pole at s' = s subtracted.
cplx psi_cut(const FractionalOrder& ord, double s, CutSide side);

/// Small-|z| expansion z^{-nu} + z^{1-nu}/2 + zeta(-nu) z / Gamma(1+nu).
cplx psi_asym_small(const FractionalOrder& ord, cplx z);

/// Leading behaviour as Re z -> -inf with 0 < Im z < pi:
/// sin(pi nu)/(pi nu) * (i pi - z)^{-nu}.
cplx psi_asym_deep(const FractionalOrder& ord, cplx z);

}  // namespace fdg::special
