#include "fdg/tridiagonal.hpp"

#include <stdexcept>
#include <string>

namespace fdg {

void SymTridiag::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = diag.size();
  if (x.size() != n || y.size() != n || off.size() + 1 != n) {
    throw std::invalid_argument("SymTridiag::apply: size mismatch");
  }
  if (n == 1) {
    y[0] = diag[0] * x[0];
    return;
  }
  y[0] = diag[0] * x[0] + off[0] * x[1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    y[i] = off[i - 1] * x[i - 1] + diag[i] * x[i] + off[i] * x[i + 1];
  }
  y[n - 1] = off[n - 2] * x[n - 2] + diag[n - 1] * x[n - 1];
}

std::vector<double> SymTridiag::apply(std::span<const double> x) const {
  std::vector<double> y(x.size());
  apply(x, y);
  return y;
}

double SymTridiag::quadratic_form(std::span<const double> x) const {
  const auto y = apply(x);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += x[i] * y[i];
  return s;
}

SymTridiag SymTridiag::plus_scaled(double c, const SymTridiag& b) const {
  if (b.diag.size() != diag.size() || b.off.size() != off.size()) {
    throw std::invalid_argument("SymTridiag::plus_scaled: size mismatch");
  }
  SymTridiag r = *this;
  for (std::size_t i = 0; i < diag.size(); ++i) r.diag[i] += c * b.diag[i];
  for (std::size_t i = 0; i < off.size(); ++i) r.off[i] += c * b.off[i];
  return r;
}

TridiagFactor::TridiagFactor(const SymTridiag& a) {
  const std::size_t n = a.diag.size();
  if (n == 0 || a.off.size() + 1 != n) {
    throw std::invalid_argument("TridiagFactor: malformed matrix");
  }
  d_.resize(n);
  l_.resize(n - 1);
  d_[0] = a.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      l_[i - 1] = a.off[i - 1] / d_[i - 1];
      d_[i] = a.diag[i] - l_[i - 1] * a.off[i - 1];
    }
    if (!(d_[i] > 0.0)) {
      throw std::domain_error("TridiagFactor: matrix is not positive definite (pivot " +
                              std::to_string(i) + ")");
    }
  }
}

void TridiagFactor::solve(std::span<double> b) const {
  const std::size_t n = d_.size();
  if (b.size() != n) throw std::invalid_argument("TridiagFactor::solve: size mismatch");
  for (std::size_t i = 1; i < n; ++i) b[i] -= l_[i - 1] * b[i - 1];
  for (std::size_t i = 0; i < n; ++i) b[i] /= d_[i];
  for (std::size_t i = n - 1; i-- > 0;) b[i] -= l_[i] * b[i + 1];
}

}  // namespace fdg
