#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fdg/errors.hpp"
#include "fdg/quadrature.hpp"

using namespace fdg::quad;
constexpr double pi = std::numbers::pi;

TEST_CASE("polynomials and smooth functions on finite intervals") {
  CHECK(finite([](double x) { return x * x; }, 0.0, 3.0).value == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(finite([](double x) { return std::cos(x); }, 0.0, pi / 2).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(finite([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  // reversed limits flip the sign
  CHECK(finite([](double x) { return std::exp(x); }, 1.0, 0.0).value ==
        doctest::Approx(-(std::exp(1.0) - 1.0)).epsilon(1e-14));
}

TEST_CASE("integrable endpoint singularities") {
  // int_0^1 x^{-1/2} = 2, int_0^1 x^{-0.9} = 10, int_0^1 log x = -1
  CHECK(finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(finite([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, 1e-10).value ==
        doctest::Approx(10.0).epsilon(1e-8));
  CHECK(finite([](double x) { return std::log(x); }, 0.0, 1.0).value ==
        doctest::Approx(-1.0).epsilon(1e-13));
  // singular at the right end as well
  CHECK(finite([](double x) { return 1.0 / std::sqrt(-x); }, -1.0, 0.0).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  // at +-1 the integrand only sees points one ulp apart, which caps the
  // accuracy near sqrt(ulp)
  CHECK(finite([](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); }, -1.0, 1.0, 1e-10)
            .value == doctest::Approx(pi).epsilon(1e-7));
}

TEST_CASE("complex integrand") {
  auto r = finite_complex([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, pi);
  CHECK(std::abs(r.value - std::complex<double>(0.0, 2.0)) < 1e-14);
}

TEST_CASE("semi-infinite tails") {
  CHECK(tail([](double x) { return 1.0 / (x * x); }, 2.0).value == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(tail([](double x) { return std::exp(-x); }, 1.0).value ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
  const std::vector<double> br = {1.0};
  CHECK(half_line([](double x) { return 1.0 / (1.0 + x * x); }, br).value ==
        doctest::Approx(pi / 2).epsilon(1e-13));
  // Gamma(0.3) = int_0^inf x^{-0.7} e^{-x}
  const std::vector<double> br2 = {0.5, 3.0};
  CHECK(half_line([](double x) { return std::pow(x, -0.7) * std::exp(-x); }, br2).value ==
        doctest::Approx(std::tgamma(0.3)).epsilon(1e-12));
  auto c = half_line_complex(
      [](double x) { return std::complex<double>(std::exp(-x), std::exp(-2.0 * x)); }, br);
  CHECK(std::abs(c.value - std::complex<double>(1.0, 0.5)) < 1e-13);
}

TEST_CASE("non-convergence is reported") {
  // int_0^1 1/x diverges
  CHECK_THROWS_AS(finite([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-14), fdg::ConvergenceError);
}
