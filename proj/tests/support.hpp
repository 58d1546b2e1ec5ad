#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "ionbounds/quadrature.hpp"

// Absolute-tolerance check; doctest's Approx is relative-only.
#define CHECK_ABS(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
#define REQUIRE_ABS(a, b, tol) REQUIRE(std::abs((a) - (b)) <= (tol))

namespace oracles {

// Normalized hydrogen radial wavefunction R_{nl}(r) (Bohr radius 1), built
// from the associated Laguerre recurrence. Test-side reference only; the
// library never evaluates wavefunctions.
inline double laguerre(int k, int alpha, double x) {
  double lm1 = 1.0;
  if (k == 0) return lm1;
  double l = 1.0 + alpha - x;
  for (int i = 1; i < k; ++i) {
    const double lp1 = ((2.0 * i + 1.0 + alpha - x) * l - (i + alpha) * lm1) / (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

inline double radial_wavefunction(int n, int l, double r) {
  double log_norm = 3.0 * std::log(2.0 / n) - std::log(2.0 * n);
  for (int j = n - l; j <= n + l; ++j) log_norm -= std::log(static_cast<double>(j));
  // (n-l-1)! / (n+l)! accumulated as the product over (n-l)..(n+l).
  const double norm = std::exp(0.5 * log_norm);
  const double x = 2.0 * r / n;
  return norm * std::pow(x, l) * laguerre(n - l - 1, 2 * l + 1, x) * std::exp(-r / n);
}

// <R_{nl} | f(r) | R_{nl}> with the r^2 radial measure, by quadrature.
inline double radial_expectation(int n, int l, const std::function<double(double)>& f) {
  auto integrand = [&](double r) {
    const double R = radial_wavefunction(n, l, r);
    return R * R * r * r * f(r);
  };
  ionbounds::QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-12;
  return ionbounds::integrate_semi_infinite(integrand, 0.0, 2.0 / n, opts).value;
}

// Free 1-D evolution of a unit-width Gaussian exp(-z^2/2) for time dt:
// (1 + i dt)^{-1/2} exp(-z^2 / (2 (1 + i dt))).
inline std::complex<double> evolved_gaussian(double z, double dt) {
  const std::complex<double> width(1.0, dt);
  return std::sqrt(1.0 / width) * std::exp(-z * z / (2.0 * width));
}

// Applies a 1-D propagator kernel to a wave function by quadrature over a
// truncated support, integrating real and imaginary parts separately.
inline std::complex<double> apply_kernel(
    const std::function<std::complex<double>(double, double)>& kernel, double z,
    const std::function<std::complex<double>(double)>& wave, double support) {
  ionbounds::QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  opts.rel_tol = 1e-9;
  auto real_part = [&](double zp) { return std::real(kernel(z, zp) * wave(zp)); };
  auto imag_part = [&](double zp) { return std::imag(kernel(z, zp) * wave(zp)); };
  return {ionbounds::integrate(real_part, -support, support, opts).value,
          ionbounds::integrate(imag_part, -support, support, opts).value};
}

}  // namespace oracles
