#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fdg/errors.hpp"
#include "fdg/laplace_inversion.hpp"
#include "oracles.hpp"

using namespace fdg::laplace;
using fdg::special::FractionalOrder;

TEST_CASE("contour spec validation") {
  CHECK_THROWS_AS(ContourSpec::for_window(3, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(ContourSpec::for_window(20, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(ContourSpec::for_window(20, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContourSpec::for_window(20, 1.0, 1.0 + max_window_ratio), std::invalid_argument);
  const auto s = ContourSpec::for_window(20, 0.5, 5.0);
  CHECK(s.node_count() == 41);
  CHECK_NOTHROW(s.validate());
  auto bad = s;
  bad.angle = 2.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("elementary transforms") {
  // 80 node pairs reach round-off on a ratio-50 window
  const auto spec = ContourSpec::for_window(80, 0.1, 5.0);
  CHECK(invert([](cplx z) { return 1.0 / z; }, 1.0, spec) == doctest::Approx(1.0).epsilon(1e-13));
  for (double t : {0.1, 0.37, 1.0, 2.2, 5.0}) {
    CAPTURE(t);
    CHECK(std::abs(invert([](cplx z) { return 1.0 / (z + 1.0); }, t, spec) - std::exp(-t)) < 1e-13);
    // 1/(z+1)^2 -> t e^{-t}, 1/sqrt(z) -> 1/sqrt(pi t)
    CHECK(std::abs(invert([](cplx z) { return 1.0 / ((z + 1.0) * (z + 1.0)); }, t, spec) -
                   t * std::exp(-t)) < 1e-13);
    CHECK(std::abs(invert([](cplx z) { return 1.0 / std::sqrt(z); }, t, spec) -
                   1.0 / std::sqrt(std::numbers::pi * t)) < 1e-13);
  }
  CHECK_THROWS_AS(invert([](cplx z) { return 1.0 / z; }, 6.0, spec), std::invalid_argument);
}

TEST_CASE("Mittag-Leffler transform at nu = 1/2") {
  auto F = [](cplx z) { return 1.0 / (z + std::sqrt(z)); };
  const auto spec = ContourSpec::for_window(40, 1.0, 1.0);
  CHECK(invert(F, 1.0, spec) == doctest::Approx(0.4275835761558070).epsilon(1e-13));
  CHECK(invert_converged(F, 1.0, 1e-13) == doctest::Approx(0.4275835761558070).epsilon(1e-13));
}

TEST_CASE("node count trades against accuracy") {
  auto F = [](cplx z) { return 1.0 / (z + 1.0); };
  double prev = HUGE_VAL;
  for (int k : {10, 20, 30, 40}) {
    const auto spec = ContourSpec::for_window(k, 0.02, 1.0);
    double worst = 0.0;
    for (double t : {0.02, 0.1, 0.5, 1.0}) worst = std::max(worst, std::abs(invert(F, t, spec) - std::exp(-t)));
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 1e-11);
}

TEST_CASE("window accuracy against independent oracles") {
  // uniform over the whole window, including both ends
  const FractionalOrder half(0.5);
  for (auto [lo, hi] : {std::pair{1e-3, 5e-2}, std::pair{0.01, 0.5}, std::pair{1.0, 50.0}}) {
    const auto spec = ContourSpec::for_window(40, lo, hi);
    for (int k = 0; k <= 20; ++k) {
      const double t = lo * std::pow(hi / lo, k / 20.0);
      CAPTURE(t);
      const double got = reference_mode(half, 1.0, 1.0, t, spec);
      CHECK(std::abs(got - oracle::ml_half(std::sqrt(t))) < 1e-12);
    }
  }
}

TEST_CASE("reference modes") {
  const auto spec = ContourSpec::for_window(40, 0.5, 1.0);
  CHECK(reference_mode(FractionalOrder(0.3), 0.0, 2.5, 0.7, spec) == 2.5);
  CHECK(std::abs(reference_mode(FractionalOrder(1.0), 4.0, 1.0, 0.5, spec) - std::exp(-2.0)) < 1e-13);
  const double e = oracle::ml_taylor(0.75, 1.0);
  CHECK(std::abs(reference_mode(FractionalOrder(0.75), 1.0, 1.0, 1.0, spec) - e) < 1e-12);
  CHECK_THROWS_AS(reference_mode(FractionalOrder(0.75), -1.0, 1.0, 1.0, spec), std::invalid_argument);
}

TEST_CASE("rule reuse and kernel") {
  const auto spec = ContourSpec::for_window(60, 0.2, 2.0);
  const ContourRule rule(spec);
  CHECK(rule.nodes().size() == 61);
  std::vector<cplx> f1, f2;
  for (cplx z : rule.nodes()) {
    f1.push_back(1.0 / (z + 2.0));
    f2.push_back(std::pow(z, -1.5));
  }
  CHECK(std::abs(rule.combine(f1, 1.5) - std::exp(-3.0)) < 1e-12);
  // z^{-3/2} -> 2 sqrt(t / pi)
  CHECK(std::abs(rule.combine(f2, 1.5) / (2.0 * std::sqrt(1.5 / std::numbers::pi)) - 1.0) < 1e-12);
  const auto k = rule.kernel(1.5);
  double manual = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) manual += (k[i] * f1[i]).imag();
  CHECK(manual == doctest::Approx(rule.combine(f1, 1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(rule.combine(std::vector<cplx>(3), 1.0), std::invalid_argument);
}

TEST_CASE("window splitting covers the interval") {
  const auto specs = window_specs(40, 1e-3, 0.5);
  REQUIRE(specs.size() >= 2);
  CHECK(specs.front().t_min == 1e-3);
  CHECK(specs.back().t_max == 0.5);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(specs[i].t_max / specs[i].t_min <= max_window_ratio * (1 + 1e-12));
    if (i > 0) CHECK(specs[i].t_min == specs[i - 1].t_max);
  }
  CHECK(window_specs(40, 1.0, 1.0).size() == 1);
}
