#pragma once

#include <span>
#include <vector>

#include "fdg/special_fn.hpp"
#include "fdg/tridiagonal.hpp"

namespace fdg::dg {

/// Convolution weights of the piecewise-constant DG scheme,
///   beta_0 = 1/Gamma(1+nu),
///   beta_j = ((j+1)^nu - 2 j^nu + (j-1)^nu) / Gamma(1+nu),  j >= 1.
struct DgWeights {
  special::FractionalOrder ord;
  std::vector<double> beta;
};

/// First `count` weights beta_0 .. beta_{count-1}. Throws for count < 1.
DgWeights weights(const special::FractionalOrder& ord, int count);

/// beta_j alone; the second difference is summed as a binomial series once
/// j is large enough for direct subtraction to lose digits.
double weight(const special::FractionalOrder& ord, long j);

/// Constant step dt, levels t_n = n dt for n = 0 .. n_steps.
struct TimeGrid {
  double dt = 0.0;
  int n_steps = 0;

  double t(int n) const noexcept { return n * dt; }
  /// Throws std::invalid_argument unless dt > 0 and n_steps >= 1.
  void validate() const;
};

/// One Fourier mode u' + d^{1-nu} lambda u = 0, u(0) = u0m.
struct ModeProblem {
  special::FractionalOrder ord;
  double lambda = 0.0;
  double u0m = 1.0;
};

/// Scalar recurrence
///   (1 + beta_0 mu) U^n = U^{n-1} - mu sum_{j=1}^{n-1} beta_{n-j} U^j,  mu = lambda dt^nu.
/// Returns U^0 .. U^N (index n holds U^n).
std::vector<double> step_mode(const ModeProblem& p, const TimeGrid& grid);

/// step_mode over independent modes; result[m] holds U_m^0 .. U_m^N.
std::vector<std::vector<double>> step_spectral(const special::FractionalOrder& ord,
                                               std::span<const double> eigenvalues,
                                               std::span<const double> u0_coeffs,
                                               const TimeGrid& grid);

/// Fully discrete scheme with a mass/stiffness pair,
///   (M + beta_0 dt^nu K) U^n = M U^{n-1} - dt^nu K sum_{j=1}^{n-1} beta_{n-j} U^j.
/// The left-hand matrix is factored once. `observe(n, U^n)` is called for
/// n = 0 .. N in order; the history itself is kept internally.
template <class Observer>
void step_galerkin(const special::FractionalOrder& ord, const SymTridiag& mass,
                   const SymTridiag& stiff, const TimeGrid& grid, std::span<const double> u0,
                   Observer&& observe);

/// Same scheme, returning the whole trajectory (index n holds U^n).
std::vector<std::vector<double>> step_galerkin(const special::FractionalOrder& ord,
                                               const SymTridiag& mass, const SymTridiag& stiff,
                                               const TimeGrid& grid,
                                               std::span<const double> u0);

namespace detail {

class GalerkinStepper {
 public:
  GalerkinStepper(const special::FractionalOrder& ord, const SymTridiag& mass,
                  const SymTridiag& stiff, const TimeGrid& grid, std::span<const double> u0);

  /// Advances to the next level and returns it.
  std::span<const double> advance();
  std::span<const double> current() const noexcept { return history_.back(); }
  int level() const noexcept { return static_cast<int>(history_.size()) - 1; }

 private:
  const SymTridiag& mass_;
  const SymTridiag& stiff_;
  TimeGrid grid_;
  double scale_;  // dt^nu
  DgWeights w_;
  TridiagFactor factor_;
  std::vector<std::vector<double>> history_;
  std::vector<double> acc_, rhs_, tmp_;
};

}  // namespace detail

template <class Observer>
void step_galerkin(const special::FractionalOrder& ord, const SymTridiag& mass,
                   const SymTridiag& stiff, const TimeGrid& grid, std::span<const double> u0,
                   Observer&& observe) {
  detail::GalerkinStepper s(ord, mass, stiff, grid, u0);
  observe(0, s.current());
  for (int n = 1; n <= grid.n_steps; ++n) observe(n, s.advance());
}

}  // namespace fdg::dg
