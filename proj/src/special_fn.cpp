#include "fdg/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/sin_pi.hpp>

#include "fdg/errors.hpp"
#include "fdg/quadrature.hpp"

namespace fdg::special {
namespace {

constexpr double pi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// 1 - e^{-w} without cancellation for small |w|.
cplx one_minus_exp_neg(cplx w) {
  const double a = -w.real();
  const double b = -w.imag();
  const double half_sin = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
  const double im = std::exp(a) * std::sin(b);
  return -cplx(re, im);
}

// (n+1)^nu - n^nu for n >= 1.
double forward_difference(double nu, double n) {
  return std::pow(n, nu) * std::expm1(nu * std::log1p(1.0 / n));
}

// s^{-nu} (1 - e^{-s}) / s, the common factor of the real-line psi integrands.
double cut_weight(double nu, double s) {
  if (s < 1e-300) return 0.0;
  return std::pow(s, -nu) * (-std::expm1(-s) / s);
}

// Euler-Maclaurin for zeta(s), s > 1.
double zeta_above_one(double s) {
  constexpr int n_direct = 16;
  // B_{2k} / (2k)!
  constexpr std::array<double, 8> bern = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
  };
  double sum = 0.0;
  for (int n = n_direct - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double big_n = n_direct;
  sum += std::pow(big_n, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(big_n, -s);
  // rising factorial s (s+1) ... (s+2k-2), times N^{-s-2k+1}
  double rising = s;
  double power = std::pow(big_n, -s - 1.0);
  for (std::size_t k = 0; k < bern.size(); ++k) {
    sum += bern[k] * rising * power;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    power /= big_n * big_n;
  }
  return sum;
}

// ---- Mittag-Leffler pieces -------------------------------------------------

double ml_taylor(double nu, double s) {
  double sum = 1.0;
  double sign = -1.0;
  for (int k = 1; k < 100000; ++k) {
    const double arg = nu * k + 1.0;
    const double mag =
        arg < 170.0 ? std::pow(s, k) / std::tgamma(arg) : std::exp(k * std::log(s) - std::lgamma(arg));
    sum += sign * mag;
    sign = -sign;
    if (mag < 1e-18 && arg > 2.0) break;
  }
  return sum;
}

struct AsymptoticSum {
  double value = 0.0;
  double smallest = 0.0;  // envelope of the first omitted term
};

// sum_{k>=1} (-1)^{k+1} s^{-k} / Gamma(1 - nu k), truncated where the term
// envelope s^{-k} |1/Gamma| bound stops decreasing.
AsymptoticSum ml_asymptotic(double nu, double s) {
  const double log_s = std::log(s);
  AsymptoticSum out;
  double prev_envelope = HUGE_VAL;
  for (int k = 1; k < 20000; ++k) {
    const double x = 1.0 - nu * k;
    double log_env;
    double term;
    if (x > 0.0) {
      log_env = -k * log_s - std::lgamma(x);
      term = std::exp(log_env);
    } else {
      // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
      log_env = -k * log_s + std::lgamma(1.0 - x) - std::log(pi);
      term = std::exp(log_env) * boost::math::sin_pi(x);
    }
    const double envelope = std::exp(log_env);
    if (k > 1 && envelope > prev_envelope) {
      out.smallest = prev_envelope;
      return out;
    }
    out.value += (k % 2 == 1 ? term : -term);
    prev_envelope = envelope;
    if (envelope < 1e-18 * std::abs(out.value)) {
      out.smallest = envelope;
      return out;
    }
  }
  out.smallest = prev_envelope;
  return out;
}

constexpr double asymptotic_tolerance = 1e-15;
// (s)^{1/nu} must exceed this before the asymptotic series is trusted; the
// remainder of the optimally truncated series behaves like exp(-s^{1/nu}).
constexpr double asymptotic_min_scaled = 36.0;

bool asymptotic_usable(double nu, double s, AsymptoticSum* sum) {
  if (std::log(s) / nu < std::log(asymptotic_min_scaled)) return false;
  *sum = ml_asymptotic(nu, s);
  return sum->smallest <= asymptotic_tolerance;
}

double ml_real_line(double nu, double s) {
  const double c = std::cos(pi * nu);
  const double q = std::sin(pi * nu);
  const double inv_nu = 1.0 / nu;
  auto f = [=](double x) {
    const double decay = std::exp(-std::pow(s * x, inv_nu));
    return decay / (x * x + 2.0 * x * c + 1.0);
  };
  // exp(-(s x)^{1/nu}) < e^{-46} past this point
  const double upper = std::pow(46.0, nu) / s;
  std::vector<double> breaks = {1.0 / s, upper};
  if (c < 0.0) {
    const double peak = -c;
    breaks.push_back(peak);
    breaks.push_back(peak - 4.0 * q);
    breaks.push_back(peak + 4.0 * q);
  }
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  double lo = 0.0;
  for (double b : breaks) {
    if (b <= lo) continue;
    const double hi = std::min(b, upper);
    total += quad::finite(f, lo, hi, 1e-14).value;
    lo = hi;
    if (lo >= upper) break;
  }
  return q / (pi * nu) * total;
}

}  // namespace

// ---- FractionalOrder -------------------------------------------------------

FractionalOrder::FractionalOrder(double nu) : nu_(nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw std::invalid_argument("fractional order nu must lie in (0, 1], got " +
                                std::to_string(nu));
  }
  gamma_1p_ = nu == 1.0 ? 1.0 : std::tgamma(1.0 + nu);
  zeta_neg_ = special::zeta_neg(nu);
}

// ---- scalar functions ------------------------------------------------------

double gamma(double x) {
  if (!std::isfinite(x) || is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole or non-finite argument " + std::to_string(x));
  }
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0) return x < 170.0 ? 1.0 / std::tgamma(x) : std::exp(-std::lgamma(x));
  return boost::math::sin_pi(x) * std::tgamma(1.0 - x) / pi;
}

double zeta_neg(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw std::invalid_argument("zeta_neg: nu must lie in (0, 1]");
  }
  if (nu == 1.0) return -1.0 / 12.0;
  // zeta(-nu) = 2^{-nu} pi^{-nu-1} sin(-pi nu / 2) Gamma(1 + nu) zeta(1 + nu)
  return std::pow(2.0, -nu) * std::pow(pi, -nu - 1.0) * -boost::math::sin_pi(0.5 * nu) *
         std::tgamma(1.0 + nu) * zeta_above_one(1.0 + nu);
}

MittagLefflerRegime mittag_leffler_regime(const FractionalOrder& ord, double s) {
  if (ord.classical() || s == 0.0) return MittagLefflerRegime::exact;
  if (s <= 1.0) return MittagLefflerRegime::taylor;
  AsymptoticSum sum;
  if (asymptotic_usable(ord.nu(), s, &sum)) return MittagLefflerRegime::asymptotic;
  return MittagLefflerRegime::real_line;
}

double mittag_leffler_neg(const FractionalOrder& ord, double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error("mittag_leffler_neg: s must be finite and >= 0");
  }
  if (s == 0.0) return 1.0;
  if (ord.classical()) return std::exp(-s);
  const double nu = ord.nu();
  if (s <= 1.0) return ml_taylor(nu, s);
  AsymptoticSum sum;
  if (asymptotic_usable(nu, s, &sum)) return sum.value;
  return ml_real_line(nu, s);
}

// ---- psi -------------------------------------------------------------------

cplx psi_series(const FractionalOrder& ord, cplx z) {
  const double x = z.real();
  if (!(x > 0.0)) {
    throw std::domain_error("psi_series: requires Re z > 0");
  }
  constexpr long max_terms = 1000000;
  // terms decay at least like e^{-n x}; near the imaginary axis the
  // integral representation takes over
  if (40.0 / x > static_cast<double>(max_terms)) {
    return psi_integral(ord, z);
  }
  const double nu = ord.nu();
  const double tail_factor = 1.0 / (-std::expm1(-x));
  cplx sum = 1.0;
  for (long n = 1; n <= max_terms; ++n) {
    const double nd = static_cast<double>(n);
    const cplx term = forward_difference(nu, nd) * std::exp(-nd * z);
    sum += term;
    if (std::abs(term) * tail_factor < 1e-16 * std::abs(sum)) break;
  }
  return sum / ord.gamma_1p();
}

cplx psi_integral(const FractionalOrder& ord, cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw std::domain_error("psi_integral: z lies on the cut (-inf, 0]");
  }
  // reduce to the strip -pi < Im z <= pi
  if (std::abs(z.imag()) > pi) {
    const double shift = 2.0 * pi * std::round(z.imag() / (2.0 * pi));
    z -= cplx(0.0, shift);
  }
  if (ord.classical()) return 1.0 / one_minus_exp_neg(z);
  const double nu = ord.nu();
  std::vector<double> breaks = {std::abs(z), 1.0};
  if (z.real() < 0.0) breaks.push_back(-z.real());
  // below the first break the s^{-nu} part is integrated in closed form
  const double b = *std::min_element(breaks.begin(), breaks.end());
  const cplx c0 = 1.0 / one_minus_exp_neg(z);
  auto integrand = [=](double s) -> cplx {
    if (s >= b) return cut_weight(nu, s) / one_minus_exp_neg(z + s);
    if (s <= 0.0) return 0.0;
    const cplx q = (-std::expm1(-s) / s) / one_minus_exp_neg(z + s);
    return std::pow(s, -nu) * (q - c0);
  };
  const auto r = quad::half_line_complex(integrand, breaks, 1e-13);
  const cplx head = c0 * std::pow(b, 1.0 - nu) / (1.0 - nu);
  return std::sin(pi * nu) / pi * (r.value + head);
}

cplx psi_cut(const FractionalOrder& ord, double s, CutSide side) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("psi_cut: s must be positive and finite");
  }
  if (ord.classical()) {
    // 1 / (1 - e^{s})
    return -1.0 / std::expm1(s);
  }
  const double nu = ord.nu();
  const double sin_nu = std::sin(pi * nu);

  // g(sigma) = sigma^{-nu-1} (1 - e^{-sigma}); F = g / (1 - e^{s - sigma})
  auto g = [=](double sigma) { return cut_weight(nu, sigma); };
  auto outer = [=](double sigma) {
    const double denom = -std::expm1(s - sigma);
    if (!std::isfinite(denom)) return 0.0;
    return g(sigma) / denom;
  };
  // F(s + d) + F(s - d) with the simple pole at d = 0 cancelled analytically
  auto inner = [=](double d) {
    if (d <= 0.0) return 0.0;
    const double b = 1.0 / std::expm1(d);
    const double gp = g(s + d);
    return gp + (gp - g(s - d)) * b;
  };
  constexpr double tol = 1e-12;
  double re = 0.0;
  try {
    // the sigma^{-nu} endpoint singularity is split off analytically; left in
    // the integrand it defeats the quadrature as nu approaches 1
    const double h0 = -1.0 / std::expm1(s);
    auto regular = [=](double sigma) {
      if (sigma <= 0.0) return 0.0;
      const double q = (-std::expm1(-sigma) / sigma) / -std::expm1(s - sigma);
      return std::pow(sigma, -nu) * (q - h0);
    };
    re += h0 * std::pow(0.5 * s, 1.0 - nu) / (1.0 - nu);
    re += quad::finite(regular, 0.0, 0.5 * s, tol).value;
    re += quad::finite(inner, 0.0, 0.5 * s, tol).value;
    re += quad::tail(outer, 1.5 * s, tol).value;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("psi_cut: principal-value quadrature failed", e.achieved());
  }
  re *= sin_nu / pi;
  const double im_mag = -std::expm1(-s) * std::pow(s, -nu - 1.0) * sin_nu;
  return {re, side == CutSide::upper ? -im_mag : im_mag};
}

cplx psi_asym_small(const FractionalOrder& ord, cplx z) {
  const double nu = ord.nu();
  return std::pow(z, -nu) + 0.5 * std::pow(z, 1.0 - nu) + ord.zeta_neg() * z / ord.gamma_1p();
}

cplx psi_asym_deep(const FractionalOrder& ord, cplx z) {
  const double nu = ord.nu();
  return std::sin(pi * nu) / (pi * nu) * std::pow(cplx(0.0, pi) - z, -nu);
}

}  // namespace fdg::special
