#include "fdg/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fdg/dg_stepper.hpp"
#include "fdg/fem1d.hpp"
#include "fdg/laplace_inversion.hpp"

namespace fdg::experiment {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kappa = 4.0 / (pi * pi);
constexpr double u0_value = pi / 4.0;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("config: " + what);
}

}  // namespace

void ConvergenceConfig::validate() const {
  if (!(nu > 0.0 && nu <= 1.0)) bad("nu must lie in (0, 1], got " + std::to_string(nu));
  if (Ns.empty()) bad("N list is empty");
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 2 || Ns[i] % 2 != 0) bad("each N must be even and >= 2, got " + std::to_string(Ns[i]));
    if (i > 0 && Ns[i] != 2 * Ns[i - 1]) bad("N values must form a doubling chain");
  }
  if (M < 2 || M % 2 != 0) bad("M must be even and >= 2, got " + std::to_string(M));
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) bad("gamma must be >= 1");
  if (alphas.empty()) bad("alpha list is empty");
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 2.0)) bad("alpha must lie in [0, 2], got " + std::to_string(a));
  }
  if (!(t_end > 0.0 && t_end <= 1.0)) bad("t_end must lie in (0, 1]");
  if (t_end * Ns.front() < 1.0) bad("t_end must cover at least one step of the coarsest N");
  if (half_nodes < 8 || half_nodes > 400) bad("half_nodes must lie in [8, 400]");
  if (gauss_order < 4 || gauss_order > 10) bad("gauss_order must lie in [4, 10]");
}

std::complex<double> reference_transform(double nu, double kappa_, double u0, double x,
                                         std::complex<double> z) {
  const std::complex<double> k = std::sqrt(std::pow(z, nu) / kappa_);
  // cosh(kx)/cosh(k) = (e^{k(x-1)} + e^{-k(x+1)}) / (1 + e^{-2k})
  const std::complex<double> ratio =
      (std::exp(k * (x - 1.0)) + std::exp(-k * (x + 1.0))) / (1.0 + std::exp(-2.0 * k));
  return u0 / z * (1.0 - ratio);
}

std::vector<std::vector<double>> reference_solution(double nu, std::span<const double> xs,
                                                   std::span<const double> ts, int half_nodes) {
  if (ts.empty()) return {};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0)) throw std::invalid_argument("reference_solution: times must be positive");
    if (i > 0 && !(ts[i] > ts[i - 1])) {
      throw std::invalid_argument("reference_solution: times must increase");
    }
  }
  std::vector<std::vector<double>> out(ts.size(), std::vector<double>(xs.size()));
  const auto specs = laplace::window_specs(half_nodes, ts.front(), ts.back());
  std::size_t next = 0;
  std::vector<std::complex<double>> table;  // [x][node]
  for (std::size_t w = 0; w < specs.size() && next < ts.size(); ++w) {
    const laplace::ContourRule rule(specs[w]);
    const auto nodes = rule.nodes();
    const std::size_t K = nodes.size();
    table.assign(xs.size() * K, {});
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (std::size_t k = 0; k < K; ++k) {
        table[j * K + k] = reference_transform(nu, kappa, u0_value, xs[j], nodes[k]);
      }
    }
    const double hi = specs[w].t_max * (1.0 + 1e-12);
    while (next < ts.size() && (ts[next] <= hi || w + 1 == specs.size())) {
      const auto ker = rule.kernel(ts[next]);
      auto& row = out[next];
      for (std::size_t j = 0; j < xs.size(); ++j) {
        double s = 0.0;
        const auto* tj = &table[j * K];
        for (std::size_t k = 0; k < K; ++k) s += (ker[k] * tj[k]).imag();
        row[j] = s;
      }
      ++next;
    }
  }
  return out;
}

ConvergenceResult run_convergence(const ConvergenceConfig& cfg, const Progress& progress) {
  cfg.validate();
  auto report = [&](const char* what, double f) {
    if (progress) progress(what, f);
  };
  const special::FractionalOrder ord(cfg.nu);
  const auto mesh = fem::graded_mesh(cfg.M, cfg.gamma);
  const auto mats = fem::assemble(kappa, mesh);
  const auto u0 = fem::l2_project([](double) { return u0_value; }, mesh, cfg.gauss_order);
  const auto xs = fem::gauss_points(mesh, cfg.gauss_order);

  // every run's levels up to t_end are levels of the finest run
  const int n_fine = cfg.Ns.back();
  const int steps_fine = static_cast<int>(std::floor(cfg.t_end * n_fine + 1e-9));
  std::vector<double> ts(steps_fine);
  for (int n = 1; n <= steps_fine; ++n) ts[n - 1] = static_cast<double>(n) / n_fine;
  report("reference solution", 0.0);
  const auto ref = reference_solution(cfg.nu, xs, ts, cfg.half_nodes);
  report("reference solution", 1.0);

  ConvergenceResult res;
  for (std::size_t i = 0; i < cfg.Ns.size(); ++i) {
    const int N = cfg.Ns[i];
    const int stride = n_fine / N;
    const int steps = static_cast<int>(std::floor(cfg.t_end * N + 1e-9));
    cert::ErrorCurve curve;
    curve.N = N;
    const dg::TimeGrid grid{1.0 / N, steps};
    dg::step_galerkin(ord, mats.mass, mats.stiff, grid, u0,
                      [&](int n, std::span<const double> u) {
                        if (n == 0) return;
                        curve.t.push_back(grid.t(n));
                        curve.err.push_back(fem::l2_error_sampled(
                            u, mesh, ref[static_cast<std::size_t>(n) * stride - 1],
                            cfg.gauss_order));
                      });
    res.curves.push_back(std::move(curve));
    report("time stepping", static_cast<double>(i + 1) / cfg.Ns.size());
  }
  res.table = cert::weighted_error_table(res.curves, cfg.alphas, cfg.t_end);
  return res;
}

double expected_rate(double nu, double alpha) { return std::min(1.0, alpha + nu / 4.0); }

}  // namespace fdg::experiment
