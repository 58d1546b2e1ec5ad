#include "ionbounds/hydrogen.hpp"

#include <cmath>

#include "ionbounds/quadrature.hpp"

namespace ionbounds {

namespace {

// Below this shift the quadrature forms lose digits to cancellation; the
// series / limit values are exact to well past double precision there.
constexpr double kSmallShift = 1e-6;

double require_nonnegative_shift(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("shift distance must be >= 0");
  return c;
}

}  // namespace

double inv_r_mean(const HydrogenState& s) {
  const double n = s.n();
  return 1.0 / (n * n);
}

double inv_r2_mean(const HydrogenState& s) {
  const double n = s.n();
  return 1.0 / (n * n * n * (s.l() + 0.5));
}

double r2_mean(const HydrogenState& s) {
  const double n = s.n();
  const double l = s.l();
  return 0.5 * n * n * (5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0));
}

MatrixElementValue pz_norm_sq(const HydrogenState& s) {
  if (s.l() == 0) {
    const double n = s.n();
    return {1.0 / (3.0 * n * n), Exactness::exact};
  }
  // ||p_z psi||^2 <= 2 <H0> = -2E by the virial theorem.
  return {-2.0 * s.energy(), Exactness::upper_estimate};
}

MatrixElementValue z_norm_sq(const HydrogenState& s) {
  if (s.l() == 0) return {r2_mean(s) / 3.0, Exactness::exact};
  return {r2_mean(s), Exactness::upper_estimate};
}

double h0_shift_norm_sq(const HydrogenState& s) {
  const double n = s.n();
  return 1.0 - 1.0 / (n * n * n * n) + 4.0 / (n * n * n * (s.l() + 0.5));
}

double coulomb_mean_shifted_closed_form(double c) {
  require_nonnegative_shift(c);
  if (c < kSmallShift) return 1.0 - (2.0 / 3.0) * c * c + (2.0 / 3.0) * c * c * c;
  return (1.0 - std::exp(-2.0 * c) * (1.0 + c)) / c;
}

double coulomb_mean_shifted(double c) {
  require_nonnegative_shift(c);
  if (c < kSmallShift) return 1.0 - (2.0 / 3.0) * c * c + (2.0 / 3.0) * c * c * c;
  const double inner =
      integrate([](double r) { return r * r * std::exp(-2.0 * r); }, 0.0, c).value;
  const double outer =
      integrate_semi_infinite([](double r) { return r * std::exp(-2.0 * r); }, c, 2.0)
          .value;
  return (4.0 / c) * inner + 4.0 * outer;
}

double coulomb_sq_mean_shifted(double c) {
  require_nonnegative_shift(c);
  if (c < kSmallShift) return 2.0;
  auto log_kernel = [c](double r) {
    return r * std::exp(-2.0 * r) * std::log((r + c) / std::abs(r - c));
  };
  const double inner = integrate(log_kernel, 0.0, c).value;
  const double outer = integrate_semi_infinite(log_kernel, c, 2.0).value;
  return (2.0 / c) * (inner + outer);
}

double coulomb_cross_mean_shifted(double c) {
  require_nonnegative_shift(c);
  if (c < kSmallShift) return 2.0;  // <1/r^2> limit
  // <psi| (1/|x - c e_z|)(1/r) |psi> with |psi|^2 = e^{-2r}/pi. The azimuthal
  // integral is trivial; the polar integral is done numerically in u = cos
  // theta, the radial one with the r = c kink as a breakpoint.
  QuadratureOptions inner_opts;
  inner_opts.abs_tol = 1e-12;
  inner_opts.rel_tol = 1e-10;
  auto radial = [c, &inner_opts](double r) {
    auto over_distance = [c, r](double u) {
      return 1.0 / std::sqrt(r * r + c * c - 2.0 * r * c * u);
    };
    const double polar = integrate(over_distance, -1.0, 1.0, inner_opts).value;
    return r * std::exp(-2.0 * r) * polar;
  };
  QuadratureOptions outer_opts;
  outer_opts.abs_tol = 1e-11;
  outer_opts.rel_tol = 1e-9;
  const double inner = integrate(radial, 0.0, c, outer_opts).value;
  const double outer = integrate_semi_infinite(radial, c, 2.0, outer_opts).value;
  return 2.0 * (inner + outer);
}

MatrixElementValue shift_difference_norm(double c, ShiftNormMode mode) {
  require_nonnegative_shift(c);
  if (mode == ShiftNormMode::estimate) {
    // ||(V_c - V) psi||^2 <= <V_c^2> + <V^2> since the dropped cross term is
    // nonnegative; monotonicity of N2 keeps this at or below 2.
    return {std::sqrt(coulomb_sq_mean_shifted(c) + 2.0), Exactness::upper_estimate};
  }
  if (c < kSmallShift) return {0.0, Exactness::exact};
  const double square = coulomb_sq_mean_shifted(c) + 2.0 - 2.0 * coulomb_cross_mean_shifted(c);
  return {std::sqrt(std::max(0.0, square)), Exactness::exact};
}

}  // namespace ionbounds
