#include "fdg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fdg/errors.hpp"

namespace fdg::quad {
namespace {

// Boost's integrate() members are not const-callable, so each thread keeps
// its own instance.
boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> instance(15);
  return instance;
}

void check(double err, double l1, double rel_tol, const char* where) {
  const double scale = std::max(l1, 1e-300);
  if (!(err <= 100.0 * rel_tol * scale) && err > 1e-300) {
    throw ConvergenceError(std::string("quadrature did not converge in ") + where,
                           err / scale);
  }
}

template <class Fn>
auto finite_impl(const Fn& f, double a, double b, double rel_tol) {
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  double err = 0.0;
  double l1 = 0.0;
  // Work on [-1, 1] with the (x, complement) form so nodes near an endpoint
  // are placed by their distance to it rather than by a rounded position.
  const double half = 0.5 * (b - a);
  const double a_in = std::nextafter(a, b);
  const double b_in = std::nextafter(b, a);
  auto g = [&](double x, double xc) {
    const double d = half * std::abs(xc);
    const double pos = x < 0.0 ? a + d : b - d;
    return f(std::clamp(pos, a_in, b_in));
  };
  auto value = sign * half * integrator().integrate(g, rel_tol, &err, &l1);
  err *= std::abs(half);
  l1 *= std::abs(half);
  check(err, l1, rel_tol, "finite interval");
  return std::pair{value, err};
}

}  // namespace

Result finite(const RealFn& f, double a, double b, double rel_tol) {
  if (a == b) return {0.0, 0.0};
  auto [v, e] = finite_impl(f, a, b, rel_tol);
  return {v, e};
}

ComplexResult finite_complex(const ComplexFn& f, double a, double b, double rel_tol) {
  if (a == b) return {{0.0, 0.0}, 0.0};
  auto [v, e] = finite_impl(f, a, b, rel_tol);
  return {v, e};
}

Result tail(const RealFn& f, double a, double rel_tol) {
  auto mapped = [&](double u) {
    const double x = a / u;
    if (u <= 0.0 || !std::isfinite(x)) return 0.0;
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : (fx * x) / u;
  };
  auto [v, e] = finite_impl(mapped, 0.0, 1.0, rel_tol);
  return {v, e};
}

ComplexResult tail_complex(const ComplexFn& f, double a, double rel_tol) {
  auto mapped = [&](double u) -> std::complex<double> {
    const double x = a / u;
    if (u <= 0.0 || !std::isfinite(x)) return {0.0, 0.0};
    const std::complex<double> fx = f(x);
    return fx == 0.0 ? fx : (fx * x) / u;
  };
  auto [v, e] = finite_impl(mapped, 0.0, 1.0, rel_tol);
  return {v, e};
}

namespace {

std::vector<double> clean_breaks(std::span<const double> breaks) {
  std::vector<double> b;
  for (double x : breaks) {
    if (x > 0.0 && std::isfinite(x)) b.push_back(x);
  }
  if (b.empty()) b.push_back(1.0);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end(),
                      [](double x, double y) { return std::abs(x - y) <= 1e-12 * y; }),
          b.end());
  return b;
}

template <class R, class Fn, class Finite, class Tail>
R half_line_impl(const Fn& f, std::span<const double> breaks, double rel_tol, Finite finite,
                 Tail tail) {
  const auto b = clean_breaks(breaks);
  R total{};
  double lo = 0.0;
  for (double hi : b) {
    auto piece = finite(f, lo, hi, rel_tol);
    total.value += piece.value;
    total.error += piece.error;
    lo = hi;
  }
  auto t = tail(f, lo, rel_tol);
  total.value += t.value;
  total.error += t.error;
  return total;
}

}  // namespace

Result half_line(const RealFn& f, std::span<const double> breaks, double rel_tol) {
  return half_line_impl<Result>(
      f, breaks, rel_tol, [](const RealFn& g, double a, double b, double r) { return finite(g, a, b, r); },
      [](const RealFn& g, double a, double r) { return tail(g, a, r); });
}

ComplexResult half_line_complex(const ComplexFn& f, std::span<const double> breaks,
                                double rel_tol) {
  return half_line_impl<ComplexResult>(
      f, breaks, rel_tol,
      [](const ComplexFn& g, double a, double b, double r) { return finite_complex(g, a, b, r); },
      [](const ComplexFn& g, double a, double r) { return tail_complex(g, a, r); });
}

}  // namespace fdg::quad
