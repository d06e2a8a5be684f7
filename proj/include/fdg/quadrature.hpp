#pragma once

#include <complex>
#include <functional>
#include <span>

namespace fdg::quad {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

struct Result {
  double value;
  double error;
};

struct ComplexResult {
  std::complex<double> value;
  double error;
};

/// Double-exponential (tanh-sinh) quadrature on a finite interval [a, b].
/// Tolerates integrable algebraic singularities at either endpoint. Nodes are
/// never closer to an endpoint than one ulp, so a singularity at a nonzero
/// endpoint like (1 - x)^{-1/2} is resolved only to about sqrt(ulp); put
/// singular points at 0 where that matters.
/// Throws ConvergenceError if the relative tolerance is not met.
Result finite(const RealFn& f, double a, double b, double rel_tol = 1e-13);
ComplexResult finite_complex(const ComplexFn& f, double a, double b, double rel_tol = 1e-13);

/// Integral over [a, inf), a > 0, via s = a/u mapped onto (0, 1].
/// The integrand must decay at least like s^{-1-eps}.
Result tail(const RealFn& f, double a, double rel_tol = 1e-13);
ComplexResult tail_complex(const ComplexFn& f, double a, double rel_tol = 1e-13);

/// Integral over (0, inf) split at the given (positive, sorted or not)
/// breakpoints; the last piece uses `tail`.
Result half_line(const RealFn& f, std::span<const double> breaks, double rel_tol = 1e-13);
ComplexResult half_line_complex(const ComplexFn& f, std::span<const double> breaks,
                                double rel_tol = 1e-13);

}  // namespace fdg::quad
