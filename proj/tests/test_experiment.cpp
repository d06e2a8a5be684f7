#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fdg/exact_solution.hpp"
#include "fdg/experiment.hpp"

using namespace fdg::experiment;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double kappa = 4.0 / (pi * pi);

TEST_CASE("transform of the exact solution") {
  const double nu = 0.6;
  for (cplx z : {cplx(2.0, 0.0), cplx(0.5, 3.0), cplx(-1.0, 4.0)}) {
    const cplx zn = std::pow(z, nu);
    for (double x : {-0.7, 0.0, 0.4}) {
      // eigenfunction expansion with u0m = 1/m (odd m), lambda_m = m^2
      cplx sum = 0.0;
      for (int m = 1; m < 400000; m += 2) {
        sum += std::sin(0.5 * m * pi * (x + 1.0)) / double(m) * zn / (z * (zn + double(m) * m));
      }
      CAPTURE(z);
      CAPTURE(x);
      CHECK(std::abs(reference_transform(nu, kappa, pi / 4.0, x, z) - sum) < 1e-9);
    }
    CHECK(std::abs(reference_transform(nu, kappa, pi / 4.0, 1.0, z)) < 1e-15);
    CHECK(std::abs(reference_transform(nu, kappa, pi / 4.0, -1.0, z)) < 1e-15);
  }
  // far along a contour the hyperbolic functions would overflow if formed directly
  const cplx big(-1e7, 3e7);
  const cplx v = reference_transform(0.9, kappa, pi / 4.0, 0.2, big);
  CHECK(std::isfinite(v.real()));
  CHECK(std::abs(v * big - pi / 4.0) < 1e-12);
}

TEST_CASE("reference solution matches the eigenfunction expansion") {
  for (double nu : {0.3, 0.75}) {
    const fdg::special::FractionalOrder ord(nu);
    const std::vector<double> xs = {-0.95, -0.5, 0.0, 0.3, 0.999};
    const std::vector<double> ts = {0.002, 0.01, 0.05, 0.2, 0.5};
    const auto ref = reference_solution(nu, xs, ts);
    REQUIRE(ref.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto want = fdg::exact::exact_field(ord, {}, fdg::exact::InitialData::constant_pi_over_4(),
                                                ts[i], xs, 1e-11);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        CAPTURE(nu);
        CAPTURE(ts[i]);
        CAPTURE(xs[j]);
        CHECK(std::abs(ref[i][j] - want[j]) < 1e-10);
      }
    }
  }
  const std::vector<double> xs = {0.0};
  const std::vector<double> bad = {0.1, 0.1};
  CHECK_THROWS_AS(reference_solution(0.5, xs, bad), std::invalid_argument);
  const std::vector<double> zero = {0.0};
  CHECK_THROWS_AS(reference_solution(0.5, xs, zero), std::invalid_argument);
  CHECK(reference_solution(0.5, xs, {}).empty());
}

TEST_CASE("config validation") {
  ConvergenceConfig ok;
  CHECK_NOTHROW(ok.validate());
  auto expect_bad = [](auto edit) {
    ConvergenceConfig c;
    edit(c);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  };
  expect_bad([](ConvergenceConfig& c) { c.nu = 0.0; });
  expect_bad([](ConvergenceConfig& c) { c.nu = 1.2; });
  expect_bad([](ConvergenceConfig& c) { c.Ns = {}; });
  expect_bad([](ConvergenceConfig& c) { c.Ns = {80, 240}; });
  expect_bad([](ConvergenceConfig& c) { c.Ns = {81, 162}; });
  expect_bad([](ConvergenceConfig& c) { c.M = 99; });
  expect_bad([](ConvergenceConfig& c) { c.gamma = 0.5; });
  expect_bad([](ConvergenceConfig& c) { c.alphas = {}; });
  expect_bad([](ConvergenceConfig& c) { c.alphas = {-0.1}; });
  expect_bad([](ConvergenceConfig& c) { c.t_end = 0.0; });
  expect_bad([](ConvergenceConfig& c) { c.half_nodes = 4; });
  expect_bad([](ConvergenceConfig& c) { c.gauss_order = 2; });
}

TEST_CASE("predicted rates") {
  CHECK(expected_rate(0.75, 0.6) == doctest::Approx(0.7875));
  CHECK(expected_rate(0.75, 0.7) == doctest::Approx(0.8875));
  CHECK(expected_rate(0.75, 0.8125) == 1.0);
  CHECK(expected_rate(1.0, 0.9) == 1.0);
}

TEST_CASE("small convergence study") {
  ConvergenceConfig c;
  c.Ns = {40, 80, 160};
  c.M = 400;
  c.alphas = {0.6, 1.0};
  int calls = 0;
  double last = -1.0;
  const auto r = run_convergence(c, [&](const char*, double f) {
    ++calls;
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    last = f;
  });
  CHECK(calls > 0);
  CHECK(last == 1.0);
  REQUIRE(r.curves.size() == 3);
  CHECK(r.curves[0].t.size() == 20);
  CHECK(r.curves[2].t.size() == 80);
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(r.table.E[1][a] < r.table.E[0][a]);
    CHECK(r.table.E[2][a] < r.table.E[1][a]);
  }
  CHECK(std::abs(r.table.rate[2][0] - expected_rate(0.75, 0.6)) < 0.05);
  CHECK(std::abs(r.table.rate[2][1] - 1.0) < 0.05);
}
