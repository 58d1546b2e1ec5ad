#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "ionbounds/kato.hpp"
#include "ionbounds/quadrature.hpp"

#include "support.hpp"

using namespace ionbounds;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("resolvent bound evaluation") {
  // pi sqrt(2) + sqrt(pi/2) + 1 at rho = R = 1.
  const double at_unit = kPi * std::sqrt(2.0) + std::sqrt(kPi / 2.0) + 1.0;
  CHECK(resolvent_bound({1.0, 1.0}) == doctest::Approx(at_unit).epsilon(1e-15));
  CHECK(resolvent_bound({100.0, 1.0}) > 1e5);
  CHECK(resolvent_bound({1.0, 1e-8}) > 1e7);
  CHECK_THROWS_AS(resolvent_bound({-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(resolvent_bound({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("optimization reaches the closed-form minimum") {
  const auto start = std::chrono::steady_clock::now();
  const auto optimum = optimize_resolvent_bound();
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::chrono::duration<double>(elapsed).count() < 1.0);

  const double closed = resolvent_bound_closed_form();
  // 11 pi^(7/11) / (2^(6/11) 3^(9/11)) evaluates to 6.3560992612...; the
  // traditional quote truncates it to 6.35.
  CHECK(closed == doctest::Approx(6.3560992612344840).epsilon(1e-12));
  CHECK(std::abs(optimum.value - closed) / closed < 1e-6);
  CHECK(optimum.params.rho > 0.0);
  CHECK(optimum.params.R > 0.0);

  // First-order stationarity by central differences.
  const double h = 1e-6;
  const double drho = (resolvent_bound({optimum.params.rho + h, optimum.params.R}) -
                       resolvent_bound({optimum.params.rho - h, optimum.params.R})) /
                      (2.0 * h);
  const double dR = (resolvent_bound({optimum.params.rho, optimum.params.R + h}) -
                     resolvent_bound({optimum.params.rho, optimum.params.R - h})) /
                    (2.0 * h);
  CHECK(std::hypot(drho, dR) < 1e-6);
}

TEST_CASE("optimum lower-bounds random evaluations") {
  const auto optimum = optimize_resolvent_bound();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> log_scale(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double rho = std::pow(10.0, log_scale(rng));
    const double R = std::pow(10.0, log_scale(rng));
    CHECK(resolvent_bound({rho, R}) >= optimum.value - 1e-9);
  }
}

TEST_CASE("splitting norms behind the two-parameter bound") {
  // L2 norm of the inverse radius restricted to r < R is sqrt(4 pi R);
  // the sup of the rest is 1/R.
  for (double R : {0.5, 1.0, 2.0}) {
    auto shell = [](double) { return 4.0 * kPi; };  // (1/r)^2 * 4 pi r^2
    const double l2_sq = integrate(shell, 0.0, R).value;
    CHECK_ABS(std::sqrt(l2_sq), std::sqrt(4.0 * kPi * R), 1e-8);
    double sup = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double r = R + 50.0 * i / 2000.0;
      sup = std::max(sup, 1.0 / r);
    }
    CHECK_ABS(sup, 1.0 / R, 1e-8);
  }
}

TEST_CASE("first-term coefficient") {
  const double closed = resolvent_bound_closed_form();
  const double ground = generic_first_term_coefficient(HydrogenState(1, 0, 0));
  CHECK(ground == doctest::Approx(closed * std::sqrt(8.0) + std::sqrt(2.0))
                      .epsilon(1e-14));
  CHECK(ground > 19.35);
  CHECK(ground < 19.40);

  // Uniformly below 19.4, decreasing toward the resolvent constant.
  double previous = ground;
  for (int n = 2; n <= 50; ++n) {
    for (int l = 0; l < n; ++l)
      CHECK(generic_first_term_coefficient(HydrogenState(n, l, 0)) <= 19.4);
    const double k_s = generic_first_term_coefficient(HydrogenState(n, 0, 0));
    CHECK(k_s < previous);
    previous = k_s;
  }
  CHECK_ABS(previous, closed + std::sqrt(inv_r2_mean(HydrogenState(50, 0, 0))), 0.05);
}
