#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "ionbounds/volkov.hpp"

#include "support.hpp"

using namespace ionbounds;

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

SampledWave gaussian_wave(double z_min, double z_max, std::size_t n, double center,
                          double momentum = 0.0) {
  std::vector<Complex> values(n);
  const double h = (z_max - z_min) / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double z = z_min + j * h;
    values[j] = std::exp(-0.5 * (z - center) * (z - center)) *
                std::polar(1.0, momentum * z);
  }
  return SampledWave(z_min, z_max, std::move(values));
}

}  // namespace

TEST_CASE("free kernel modulus and distributional limit") {
  const std::array<double, 3> x{0.3, -0.2, 1.0};
  const std::array<double, 3> xp{-1.0, 0.4, 0.2};
  for (double dt : {0.3, 1.0, -0.7}) {
    const Complex k = free_kernel(x, 1.0 + dt, xp, 1.0);
    CHECK(std::abs(k) ==
          doctest::Approx(std::pow(2.0 * kPi * std::abs(dt), -1.5)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(free_kernel(x, 1.0, xp, 1.0), DistributionalLimitError);
  CHECK_THROWS_AS(free_kernel_1d(0.0, 2.0, 1.0, 2.0), DistributionalLimitError);
}

TEST_CASE("free kernel propagates a Gaussian to its closed form") {
  auto kernel = [](double z, double zp) { return free_kernel_1d(z, 1.0, zp, 0.0); };
  auto initial = [](double zp) { return Complex(std::exp(-0.5 * zp * zp), 0.0); };
  for (double z : {-2.0, -0.5, 0.0, 0.7, 1.9}) {
    const Complex propagated = oracles::apply_kernel(kernel, z, initial, 30.0);
    const Complex expected = oracles::evolved_gaussian(z, 1.0);
    CHECK_ABS(std::abs(propagated - expected), 0.0, 1e-6);
  }
}

TEST_CASE("free kernel composes over intermediate times") {
  // Closed-form state at dt = 0.5 pushed through another half step must
  // equal the closed-form state at dt = 1.
  auto kernel = [](double z, double zp) { return free_kernel_1d(z, 1.0, zp, 0.5); };
  auto halfway = [](double zp) { return oracles::evolved_gaussian(zp, 0.5); };
  for (double z : {-1.5, 0.0, 0.4, 1.2}) {
    const Complex stepped = oracles::apply_kernel(kernel, z, halfway, 30.0);
    const Complex direct = oracles::evolved_gaussian(z, 1.0);
    CHECK_ABS(std::abs(stepped - direct), 0.0, 1e-6);
  }
}

TEST_CASE("field kernels reduce to the free kernel for the zero pulse") {
  const Pulse none = Pulse::constant(0.0, 1.0);
  const auto params = VolkovKernelParams::from_pulse(none, 0.9, 0.1);
  const std::array<double, 3> x{0.1, 0.2, -0.4};
  const std::array<double, 3> xp{0.0, -0.3, 0.8};
  const Complex free_val = free_kernel(x, 0.9, xp, 0.1);
  CHECK_ABS(std::abs(volkov_kernel(GaugeFrame::length, params, x, xp) - free_val),
            0.0, 1e-15);
  CHECK_ABS(std::abs(volkov_kernel(GaugeFrame::velocity, params, x, xp) - free_val),
            0.0, 1e-15);
}

TEST_CASE("kernel modulus is field independent") {
  const Pulse pulse = Pulse::cosine(5.0, 1.5, 4.0);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> zdist(-4.0, 4.0);
  std::uniform_real_distribution<double> tdist(0.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    double t = tdist(rng), tp = tdist(rng);
    if (std::abs(t - tp) < 1e-3) continue;
    const auto params = VolkovKernelParams::from_pulse(pulse, t, tp);
    const Complex k =
        volkov_kernel_1d(GaugeFrame::length, params, zdist(rng), zdist(rng));
    CHECK(std::abs(k) ==
          doctest::Approx(std::pow(2.0 * kPi * std::abs(t - tp), -0.5)).epsilon(1e-12));
  }
}

TEST_CASE("length and velocity kernels differ by the momentum phase") {
  const Pulse pulse = Pulse::cosine(5.0, 1.5, 4.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> zdist(-4.0, 4.0);
  std::uniform_real_distribution<double> tdist(0.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    double t = tdist(rng), tp = tdist(rng);
    if (std::abs(t - tp) < 1e-3) continue;
    const double z = zdist(rng), zp = zdist(rng);
    const auto params = VolkovKernelParams::from_pulse(pulse, t, tp);
    const Complex ratio = volkov_kernel_1d(GaugeFrame::length, params, z, zp) /
                          volkov_kernel_1d(GaugeFrame::velocity, params, z, zp);
    const Complex expected = std::polar(1.0, params.b_tp * zp - params.b_t * z);
    CHECK_ABS(std::abs(ratio - expected), 0.0, 1e-12);
  }
}

TEST_CASE("length-gauge kernel equals the frame-transformed free kernel") {
  const Pulse pulse = Pulse::cosine(5.0, 1.5, 4.0);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> zdist(-5.0, 5.0);
  std::uniform_real_distribution<double> tdist(0.0, 4.0);
  int checked = 0;
  while (checked < 100) {
    const double t = tdist(rng), tp = tdist(rng);
    if (std::abs(t - tp) < 1e-2) continue;
    const double z = zdist(rng), zp = zdist(rng);
    const auto params = VolkovKernelParams::from_pulse(pulse, t, tp);
    const Complex lhs = volkov_kernel_1d(GaugeFrame::length, params, z, zp);
    const Complex rhs = std::polar(1.0, -params.a_t - params.b_t * z) *
                        free_kernel_1d(z - params.c_t, t, zp - params.c_tp, tp) *
                        std::polar(1.0, params.a_tp + params.b_tp * zp);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    ++checked;
  }
}

TEST_CASE("3-D kernel separates into transverse free factors") {
  const Pulse pulse = Pulse::cosine(2.0, 1.0, 3.0);
  const auto params = VolkovKernelParams::from_pulse(pulse, 2.5, 0.5);
  const std::array<double, 3> x{0.3, -1.0, 0.7};
  const std::array<double, 3> xp{-0.4, 0.2, -1.1};
  const Complex full = volkov_kernel(GaugeFrame::length, params, x, xp);
  const Complex factored = free_kernel_1d(x[0], 2.5, xp[0], 0.5) *
                           free_kernel_1d(x[1], 2.5, xp[1], 0.5) *
                           volkov_kernel_1d(GaugeFrame::length, params, x[2], xp[2]);
  CHECK_ABS(std::abs(full - factored), 0.0, 1e-15);
  CHECK_THROWS_AS(volkov_kernel(GaugeFrame::kramers_henneberger, params, x, xp),
                  std::invalid_argument);
}

TEST_CASE("sampled-wave transform: identity, pure shift, round trip") {
  const SampledWave wave = gaussian_wave(-20.0, 20.0, 256, 1.0, 0.7);
  const double h = wave.grid_step();

  SUBCASE("identity") {
    const SampledWave same = kh_transform(wave, 0.0, 0.0, 0.0);
    for (std::size_t j = 0; j < wave.size(); ++j)
      CHECK(std::abs(same.values[j] - wave.values[j]) == 0.0);
  }

  SUBCASE("grid-commensurate shift is an exact permutation") {
    const double c = 16.0 * h;
    const SampledWave shifted = kh_transform(wave, 0.0, c, 0.0);
    CHECK_ABS(shifted.norm(), wave.norm(), 1e-14);
    for (std::size_t j = 16; j < wave.size(); ++j)
      CHECK(shifted.values[j] == wave.values[j - 16]);
  }

  SUBCASE("round trip") {
    for (double c : {8.0 * h, 3.1415}) {  // commensurate and fractional
      const SampledWave there = kh_transform(wave, 0.4, c, 1.3);
      const SampledWave back = kh_transform(there, 0.4, c, 1.3, /*inverse=*/true);
      double worst = 0.0;
      for (std::size_t j = 0; j < wave.size(); ++j)
        worst = std::max(worst, std::abs(back.values[j] - wave.values[j]));
      CHECK(worst < 1e-12);
    }
  }

  SUBCASE("norm preservation") {
    const SampledWave moved = kh_transform(wave, 1.1, 7.0 * h, 0.2);
    CHECK_ABS(moved.norm(), wave.norm(), 1e-10);
    const SampledWave fractional = kh_transform(wave, 1.1, 2.7182, 0.2);
    CHECK_ABS(fractional.norm(), wave.norm(), 1e-10);
  }

  SUBCASE("shift beyond the grid span is refused") {
    CHECK_THROWS_AS(kh_transform(wave, 0.0, 41.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("gauge transform algebra") {
  const PulseIntegrals integrals{0.8, -0.6, 0.25, 1.0};

  SUBCASE("composition with the inverse is the identity") {
    const auto t = gauge_between(GaugeFrame::length, GaugeFrame::kramers_henneberger,
                                 integrals);
    const auto composed = gauge_compose(t, gauge_inverse(t));
    CHECK(composed.phase == doctest::Approx(0.0).scale(1.0));
    CHECK(composed.z_slope == 0.0);
    CHECK(composed.shift == 0.0);
    CHECK(composed.from == composed.to);
  }

  SUBCASE("the two generators compose to the accelerated-to-velocity map") {
    const auto v_from_l =
        gauge_between(GaugeFrame::velocity, GaugeFrame::length, integrals);
    const auto l_from_kh = gauge_between(GaugeFrame::length,
                                         GaugeFrame::kramers_henneberger, integrals);
    const auto composed = gauge_compose(v_from_l, l_from_kh);
    // The z-dependent phases cancel, leaving only the scalar phase and shift.
    CHECK(composed.z_slope == 0.0);
    CHECK(composed.phase == doctest::Approx(-integrals.a).epsilon(1e-15));
    CHECK(composed.shift == doctest::Approx(integrals.c).epsilon(1e-15));

    const auto direct = gauge_between(GaugeFrame::velocity,
                                      GaugeFrame::kramers_henneberger, integrals);
    CHECK(direct.phase == composed.phase);
    CHECK(direct.z_slope == composed.z_slope);
    CHECK(direct.shift == composed.shift);
  }

  SUBCASE("associativity on random triples") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
      GaugeTransform a{GaugeFrame::velocity, GaugeFrame::kramers_henneberger,
                       dist(rng), dist(rng), dist(rng)};
      GaugeTransform b{GaugeFrame::length, GaugeFrame::velocity, dist(rng),
                       dist(rng), dist(rng)};
      GaugeTransform c{GaugeFrame::kramers_henneberger, GaugeFrame::length,
                       dist(rng), dist(rng), dist(rng)};
      const auto left = gauge_compose(gauge_compose(a, b), c);
      const auto right = gauge_compose(a, gauge_compose(b, c));
      CHECK_ABS(left.phase, right.phase, 1e-12);
      CHECK_ABS(left.z_slope, right.z_slope, 1e-12);
      CHECK_ABS(left.shift, right.shift, 1e-12);
    }
  }

  SUBCASE("frame mismatch is refused") {
    GaugeTransform a{GaugeFrame::length, GaugeFrame::velocity, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(gauge_compose(a, a), std::invalid_argument);
  }
}

TEST_CASE("applying the frame map to a sampled wave matches kh_transform") {
  const PulseIntegrals integrals{0.5, 1.25, 0.9, 2.0};
  const SampledWave wave = gaussian_wave(-16.0, 16.0, 128, -2.0);
  const auto t =
      gauge_between(GaugeFrame::length, GaugeFrame::kramers_henneberger, integrals);
  const SampledWave via_transform = apply_gauge_transform(t, wave);
  const SampledWave direct = kh_transform(wave, integrals.b, integrals.c, integrals.a);
  for (std::size_t j = 0; j < wave.size(); ++j)
    CHECK(std::abs(via_transform.values[j] - direct.values[j]) < 1e-13);
}
