#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "fdg/dg_stepper.hpp"
#include "oracles.hpp"

using namespace fdg::dg;
using fdg::SymTridiag;
using fdg::special::FractionalOrder;

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

TEST_CASE("weights: classical limit and first weight") {
  const auto w1 = weights(FractionalOrder(1.0), 8);
  CHECK(w1.beta[0] == 1.0);
  for (int j = 1; j < 8; ++j) CHECK(w1.beta[j] == 0.0);
  const auto w = weights(FractionalOrder(0.5), 3);
  CHECK(w.beta[0] == doctest::Approx(1.1283791670955126).epsilon(1e-15));
  CHECK_THROWS_AS(weights(FractionalOrder(0.5), 0), std::invalid_argument);
}

TEST_CASE("weights: sign and telescoping sums") {
  for (double nu : {0.1, 0.5, 0.75, 0.9}) {
    const int J = 100000;
    const auto w = weights(FractionalOrder(nu), J + 1);
    const double g = boost::math::tgamma(1.0 + nu);
    double sum = 0.0;
    for (int j = 0; j <= J; ++j) {
      if (j >= 1) REQUIRE(w.beta[j] < 0.0);
      sum += w.beta[j];
      if (j == 10 || j == 1000 || j == J) {
        const oracle::mp v = nu;
        const double want = static_cast<double>(pow(oracle::mp(j + 1), v) - pow(oracle::mp(j), v)) / g;
        CAPTURE(nu);
        CAPTURE(j);
        CHECK(std::abs(sum - want) < 1e-12);
      }
    }
  }
  // (sqrt(11) - sqrt(10)) / Gamma(3/2)
  const auto w = weights(FractionalOrder(0.5), 11);
  CHECK(std::accumulate(w.beta.begin(), w.beta.end(), 0.0) ==
        doctest::Approx(0.1741620862040129).epsilon(1e-14));
}

TEST_CASE("weights: second difference to full relative precision") {
  for (double nu : {0.05, 0.3, 0.75, 0.99}) {
    FractionalOrder o(nu);
    const double g = boost::math::tgamma(1.0 + nu);
    for (long j : {1L, 2L, 3L, 4L, 5L, 17L, 999L, 10001L, 123456L, 99999999L}) {
      const double want = oracle::second_difference(nu, j) / g;
      CAPTURE(nu);
      CAPTURE(j);
      CHECK(std::abs(weight(o, j) / want - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("time grid validation") {
  CHECK_THROWS_AS((TimeGrid{0.0, 3}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{0.1, 0}).validate(), std::invalid_argument);
  CHECK((TimeGrid{0.25, 4}).t(3) == 0.75);
}

TEST_CASE("scalar recurrence") {
  const auto u = step_mode({FractionalOrder(1.0), 1.0, 1.0}, {1.0, 10});
  REQUIRE(u.size() == 11);
  for (int n = 0; n <= 10; ++n) CHECK(u[n] == doctest::Approx(std::ldexp(1.0, -n)).epsilon(1e-15));

  const auto flat = step_mode({FractionalOrder(0.3), 0.0, 2.0}, {0.1, 5});
  for (double v : flat) CHECK(v == 2.0);

  const auto h = step_mode({FractionalOrder(0.5), 1.0, 1.0}, {1.0, 1});
  CHECK(h[1] == doctest::Approx(1.0 / (1.0 + 1.0 / boost::math::tgamma(1.5))).epsilon(1e-15));
  CHECK(h[1] == doctest::Approx(0.4698410957313811).epsilon(1e-14));

  // hand-evaluated second step
  FractionalOrder o(0.6);
  const double mu = 2.0 * std::pow(0.1, 0.6);
  const auto w = weights(o, 2);
  const auto v = step_mode({o, 2.0, 1.0}, {0.1, 2});
  const double u1 = 1.0 / (1.0 + w.beta[0] * mu);
  const double u2 = (u1 - mu * w.beta[1] * u1) / (1.0 + w.beta[0] * mu);
  CHECK(v[1] == doctest::Approx(u1).epsilon(1e-15));
  CHECK(v[2] == doctest::Approx(u2).epsilon(1e-15));
}

TEST_CASE("stability: modal amplitudes never grow") {
  // |U^n| <= |U^0| for every mode, so the l2 norm cannot grow either
  for (int k = 1; k <= 9; ++k) {
    FractionalOrder o(0.1 * k);
    for (int j = -10; j <= 10; ++j) {
      const auto u = step_mode({o, std::ldexp(1.0, j), 1.0}, {1.0, 200});
      for (double v : u) REQUIRE(std::abs(v) <= 1.0);
    }
  }
  const std::vector<double> lam = {1.0, 4.0, 9.0}, u0 = {1.0, 1.0 / 3, 1.0 / 5};
  const auto traj = step_spectral(FractionalOrder(0.75), lam, u0, {1.0 / 50, 50});
  const double n0 = norm2(u0);
  for (int n = 0; n <= 50; ++n) {
    std::vector<double> un = {traj[0][n], traj[1][n], traj[2][n]};
    CHECK(norm2(un) <= n0);
  }
}

TEST_CASE("spectral path is modewise") {
  const std::vector<double> lam = {1.0, 4.0}, u0 = {1.0, 0.0};
  FractionalOrder o(0.4);
  const TimeGrid grid{0.05, 30};
  const auto traj = step_spectral(o, lam, u0, grid);
  const auto single = step_mode({o, 1.0, 1.0}, grid);
  CHECK(traj[0] == single);
  for (double v : traj[1]) CHECK(v == 0.0);
  const std::vector<double> short_u0 = {1.0};
  CHECK_THROWS_AS(step_spectral(o, lam, short_u0, grid), std::invalid_argument);
}

TEST_CASE("Galerkin path") {
  FractionalOrder o(0.7);
  const TimeGrid grid{0.02, 60};
  SUBCASE("one degree of freedom matches the scalar recurrence") {
    const SymTridiag m{{1.0}, {}}, k{{3.0}, {}};
    const std::vector<double> u0 = {1.0};
    const auto traj = step_galerkin(o, m, k, grid, u0);
    const auto ref = step_mode({o, 3.0, 1.0}, grid);
    for (int n = 0; n <= grid.n_steps; ++n) CHECK(std::abs(traj[n][0] - ref[n]) < 1e-14);
  }
  SUBCASE("zero stiffness leaves the data unchanged") {
    const SymTridiag m{{2.0, 2.0, 2.0}, {0.5, 0.5}}, k{{0.0, 0.0, 0.0}, {0.0, 0.0}};
    const std::vector<double> u0 = {1.0, -2.0, 0.5};
    const auto traj = step_galerkin(o, m, k, grid, u0);
    for (const auto& u : traj) {
      for (int i = 0; i < 3; ++i) CHECK(u[i] == doctest::Approx(u0[i]).epsilon(1e-15));
    }
  }
  SUBCASE("classical limit is implicit Euler") {
    FractionalOrder one(1.0);
    const int n = 6;
    SymTridiag I{std::vector<double>(n, 1.0), std::vector<double>(n - 1, 0.0)};
    SymTridiag K{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = std::sin(0.5 * (i + 1));
    const TimeGrid g{0.1, 20};
    const auto traj = step_galerkin(one, I, K, g, u);
    const fdg::TridiagFactor lhs(I.plus_scaled(g.dt, K));
    for (int s = 1; s <= g.n_steps; ++s) {
      lhs.solve(u);
      for (int i = 0; i < n; ++i) CHECK(std::abs(traj[s][i] - u[i]) < 1e-14);
    }
  }
  SUBCASE("matches the spectral path in the eigenbasis of a diagonal system") {
    const SymTridiag m{{1.0, 1.0}, {0.0}}, k{{2.0, 5.0}, {0.0}};
    const std::vector<double> u0 = {0.3, -0.7};
    const auto g = step_galerkin(o, m, k, grid, u0);
    const std::vector<double> lam = {2.0, 5.0};
    const auto s = step_spectral(o, lam, u0, grid);
    for (int n = 0; n <= grid.n_steps; ++n) {
      CHECK(std::abs(g[n][0] - s[0][n]) < 1e-14);
      CHECK(std::abs(g[n][1] - s[1][n]) < 1e-14);
    }
  }
  SUBCASE("energy norm never grows") {
    const int n = 20;
    SymTridiag m{std::vector<double>(n, 4.0 / 6), std::vector<double>(n - 1, 1.0 / 6)};
    SymTridiag k{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    std::vector<double> u0(n);
    for (int i = 0; i < n; ++i) u0[i] = (i % 3) - 1.0;
    for (double nu : {0.2, 0.5, 0.9}) {
      const double e0 = m.quadratic_form(u0);
      step_galerkin(FractionalOrder(nu), m, k, TimeGrid{0.01, 200}, u0,
                    [&](int, std::span<const double> un) { REQUIRE(m.quadratic_form(un) <= e0 * (1 + 1e-14)); });
    }
  }
  SUBCASE("observer sees every level in order") {
    const SymTridiag m{{1.0}, {}}, k{{1.0}, {}};
    const std::vector<double> u0 = {1.0};
    int expect = 0;
    step_galerkin(o, m, k, grid, u0, [&](int lvl, std::span<const double>) { CHECK(lvl == expect++); });
    CHECK(expect == grid.n_steps + 1);
  }
}
