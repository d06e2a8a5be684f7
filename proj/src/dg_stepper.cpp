#include "fdg/dg_stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdg::dg {
namespace {

// Below this j the direct second difference is accurate enough.
constexpr long series_from = 4;

// (1+x)^nu - 2 + (1-x)^nu = 2 sum_{k>=1} binom(nu, 2k) x^{2k}
double second_difference_series(double nu, double x) {
  const double x2 = x * x;
  double c = 1.0;  // binom(nu, m) built incrementally
  double p = 1.0;
  double sum = 0.0;
  for (int m = 0; m < 200; m += 2) {
    c *= (nu - m) / (m + 1.0);
    c *= (nu - m - 1.0) / (m + 2.0);
    p *= x2;
    const double term = c * p;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * sum;
}

}  // namespace

double weight(const special::FractionalOrder& ord, long j) {
  if (j < 0) throw std::invalid_argument("weight: negative index");
  const double nu = ord.nu();
  if (j == 0) return 1.0 / ord.gamma_1p();
  if (ord.classical()) return 0.0;
  const double jd = static_cast<double>(j);
  double d;
  if (j < series_from) {
    d = std::pow(jd + 1.0, nu) - 2.0 * std::pow(jd, nu) + std::pow(jd - 1.0, nu);
  } else {
    d = std::pow(jd, nu) * second_difference_series(nu, 1.0 / jd);
  }
  return d / ord.gamma_1p();
}

DgWeights weights(const special::FractionalOrder& ord, int count) {
  if (count < 1) throw std::invalid_argument("weights: count must be >= 1");
  DgWeights w{ord, {}};
  w.beta.resize(count);
  for (int j = 0; j < count; ++j) w.beta[j] = weight(ord, j);
  return w;
}

void TimeGrid::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("TimeGrid: dt must be positive, got " + std::to_string(dt));
  }
  if (n_steps < 1) {
    throw std::invalid_argument("TimeGrid: n_steps must be >= 1, got " +
                                std::to_string(n_steps));
  }
}

std::vector<double> step_mode(const ModeProblem& p, const TimeGrid& grid) {
  grid.validate();
  if (!(p.lambda >= 0.0)) throw std::invalid_argument("step_mode: lambda must be >= 0");
  const int n_max = grid.n_steps;
  std::vector<double> u(n_max + 1);
  u[0] = p.u0m;
  const double mu = p.lambda * std::pow(grid.dt, p.ord.nu());
  if (mu == 0.0) {
    for (double& v : u) v = p.u0m;
    return u;
  }
  const auto w = weights(p.ord, n_max);
  const double lhs = 1.0 + w.beta[0] * mu;
  for (int n = 1; n <= n_max; ++n) {
    double h = 0.0;
    for (int j = 1; j < n; ++j) h += w.beta[n - j] * u[j];
    u[n] = (u[n - 1] - mu * h) / lhs;
  }
  return u;
}

std::vector<std::vector<double>> step_spectral(const special::FractionalOrder& ord,
                                               std::span<const double> eigenvalues,
                                               std::span<const double> u0_coeffs,
                                               const TimeGrid& grid) {
  if (eigenvalues.size() != u0_coeffs.size()) {
    throw std::invalid_argument("step_spectral: eigenvalue and coefficient counts differ");
  }
  std::vector<std::vector<double>> out;
  out.reserve(eigenvalues.size());
  for (std::size_t m = 0; m < eigenvalues.size(); ++m) {
    out.push_back(step_mode({ord, eigenvalues[m], u0_coeffs[m]}, grid));
  }
  return out;
}

namespace detail {

GalerkinStepper::GalerkinStepper(const special::FractionalOrder& ord, const SymTridiag& mass,
                                 const SymTridiag& stiff, const TimeGrid& grid,
                                 std::span<const double> u0)
    : mass_(mass),
      stiff_(stiff),
      grid_((grid.validate(), grid)),
      scale_(std::pow(grid.dt, ord.nu())),
      w_(weights(ord, grid.n_steps)),
      factor_(mass.plus_scaled(w_.beta[0] * scale_, stiff)) {
  const std::size_t n = mass.size();
  if (stiff.size() != n || u0.size() != n) {
    throw std::invalid_argument("step_galerkin: mass, stiffness and u0 sizes differ");
  }
  history_.reserve(grid.n_steps + 1);
  history_.emplace_back(u0.begin(), u0.end());
  acc_.resize(n);
  rhs_.resize(n);
  tmp_.resize(n);
}

std::span<const double> GalerkinStepper::advance() {
  const int n = level() + 1;
  if (n > grid_.n_steps) throw std::out_of_range("step_galerkin: past the final level");
  const std::size_t dim = acc_.size();
  std::fill(acc_.begin(), acc_.end(), 0.0);
  for (int j = 1; j < n; ++j) {
    const double b = w_.beta[n - j];
    const auto& uj = history_[j];
    for (std::size_t i = 0; i < dim; ++i) acc_[i] += b * uj[i];
  }
  mass_.apply(history_.back(), rhs_);
  if (n > 1) {
    stiff_.apply(acc_, tmp_);
    for (std::size_t i = 0; i < dim; ++i) rhs_[i] -= scale_ * tmp_[i];
  }
  factor_.solve(rhs_);
  history_.push_back(rhs_);
  return history_.back();
}

}  // namespace detail

std::vector<std::vector<double>> step_galerkin(const special::FractionalOrder& ord,
                                               const SymTridiag& mass, const SymTridiag& stiff,
                                               const TimeGrid& grid,
                                               std::span<const double> u0) {
  std::vector<std::vector<double>> out;
  out.reserve(grid.n_steps + 1);
  step_galerkin(ord, mass, stiff, grid, u0,
                [&](int, std::span<const double> u) { out.emplace_back(u.begin(), u.end()); });
  return out;
}

}  // namespace fdg::dg
