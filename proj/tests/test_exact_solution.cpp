#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fdg/exact_solution.hpp"
#include "fdg/laplace_inversion.hpp"
#include "oracles.hpp"

using namespace fdg::exact;
using fdg::special::FractionalOrder;
constexpr double pi = std::numbers::pi;

TEST_CASE("eigen system") {
  EigenSystem1D sys;
  for (int m = 1; m <= 5; ++m) CHECK(sys.lambda(m) == doctest::Approx(double(m * m)).epsilon(1e-15));
  CHECK(sys.phi(1, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(sys.phi(3, 1.0)) < 1e-15);
  CHECK_THROWS_AS(sys.lambda(0), std::invalid_argument);
  // orthonormal on (-1, 1)
  using G = boost::math::quadrature::gauss<double, 20>;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const double ip = G::integrate([&](double x) { return sys.phi(a, x) * sys.phi(b, x); }, -1.0, 1.0);
      CHECK(ip == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("initial data coefficients") {
  EigenSystem1D sys;
  const auto d = InitialData::constant_pi_over_4();
  using G = boost::math::quadrature::gauss<double, 30>;
  for (int m = 1; m <= 7; ++m) {
    const double c = G::integrate([&](double x) { return pi / 4 * sys.phi(m, x); }, -1.0, 1.0);
    CHECK(std::abs(d.coefficient(m) - c) < 1e-13);
  }
}

TEST_CASE("single modes") {
  CHECK(exact_mode(FractionalOrder(0.4), 3.0, 0.7, 0.0) == 0.7);
  CHECK(exact_mode(FractionalOrder(1.0), 1.0, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  const FractionalOrder o(0.75);
  const double ml = exact_mode(o, 1.0, 1.0, 1.0);
  CHECK(std::abs(ml - oracle::ml_taylor(0.75, 1.0)) < 1e-14);
  const double inv = fdg::laplace::invert_converged(
      [](std::complex<double> z) {
        const auto zn = std::pow(z, 0.75);
        return zn / (z * (zn + 1.0));
      },
      1.0, 1e-12);
  CHECK(std::abs(ml - inv) < 1e-10);
  CHECK_THROWS_AS(exact_mode(o, 1.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("field properties") {
  EigenSystem1D sys;
  const auto data = InitialData::constant_pi_over_4();
  const FractionalOrder o(0.6);
  std::vector<double> xs;
  for (int i = -20; i <= 20; ++i) xs.push_back(0.049 * i);
  const auto u = exact_field(o, sys, data, 0.3, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(u[i] - u[xs.size() - 1 - i]) < 1e-12);
  for (double v : u) CHECK(v > 0.0);
  CHECK_THROWS_AS(exact_field(o, sys, data, 0.0, xs), std::invalid_argument);

  const auto late = exact_field(FractionalOrder(1.0), sys, data, 20.0, xs);
  for (double v : late) CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("truncation meets its tolerance") {
  EigenSystem1D sys;
  const auto data = InitialData::constant_pi_over_4();
  const FractionalOrder o(0.75);
  const std::vector<double> xs = {0.0, 0.5, 0.97};
  for (double t : {1e-3, 0.05, 0.5}) {
    const auto coarse = exact_field(o, sys, data, t, xs, 1e-6);
    const auto fine = exact_field(o, sys, data, t, xs, 1e-10);
    CHECK(modes_for_tolerance(o, sys, data, t, 1e-10) > modes_for_tolerance(o, sys, data, t, 1e-6));
    // pointwise differences are bounded by the L2 tail through the sup of a mode sum
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(coarse[i] - fine[i]) < 1e-5);
  }
}

TEST_CASE("norm from coefficients matches the integrated field") {
  EigenSystem1D sys;
  const auto data = InitialData::constant_pi_over_4();
  const FractionalOrder o(0.5);
  const double t = 0.2;
  using G = boost::math::quadrature::gauss<double, 20>;
  double sq = 0.0;
  for (int p = 0; p < 40; ++p) {
    const double a = -1.0 + 0.05 * p;
    std::vector<double> xs;
    for (double q : G::abscissa()) {
      xs.push_back(a + 0.025 * (1 + q));
      xs.push_back(a + 0.025 * (1 - q));
    }
    const auto u = exact_field(o, sys, data, t, xs, 1e-11);
    for (std::size_t i = 0; i < G::weights().size(); ++i) {
      const double w = G::weights()[i] * 0.025;
      sq += w * (i == 0 && G::abscissa()[0] == 0.0 ? u[0] * u[0] : u[2 * i] * u[2 * i] + u[2 * i + 1] * u[2 * i + 1]);
    }
  }
  CHECK(std::sqrt(sq) == doctest::Approx(exact_norm(o, sys, data, t, 1e-11)).epsilon(1e-9));
}

TEST_CASE("norm tends to that of the data") {
  EigenSystem1D sys;
  const auto data = InitialData::constant_pi_over_4();
  const double limit = pi / 4 * std::sqrt(2.0);
  double prev = 0.0;
  for (double t : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double n = exact_norm(FractionalOrder(1.0), sys, data, t, 1e-9);
    CHECK(n > prev);
    CHECK(n < limit);
    prev = n;
  }
  CHECK(limit - prev < 1e-3);
}
