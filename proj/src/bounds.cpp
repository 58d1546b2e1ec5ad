#include "ionbounds/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ionbounds/kato.hpp"
#include "ionbounds/quadrature.hpp"

namespace ionbounds {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// T1 = int_0^tau ||(V(x - c(t) e_z) - V) psi|| dt, or its constant bound.
double shift_integral(const Pulse& pulse, const StateData& state,
                      const BoundOptions& options) {
  const double tau = pulse.duration();
  if (tau == 0.0) return 0.0;
  if (options.shift_mode == ShiftMode::estimate)
    return tau * state.generic_shift_constant;

  const auto& fn = options.shift_mode == ShiftMode::exact
                       ? state.shift_norm_exact
                       : state.shift_norm_estimate;
  if (!fn) throw std::invalid_argument("state has no shift-norm function for this mode");
  QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  opts.rel_tol = 1e-8;
  auto r = integrate(
      [&](double t) { return fn(std::abs(pulse.displacement(t))).value; }, 0.0,
      tau, pulse.breakpoints(), opts);
  return r.value;
}

// Shift norm at the final displacement, mode-consistent with shift_integral.
double final_shift_norm(const Pulse& pulse, const StateData& state,
                        const BoundOptions& options) {
  switch (options.shift_mode) {
    case ShiftMode::estimate:
      return state.generic_shift_constant;
    case ShiftMode::quadrature:
      if (!state.shift_norm_estimate)
        throw std::invalid_argument("state has no shift-norm estimate function");
      return state.shift_norm_estimate(std::abs(pulse.displacement(pulse.duration())))
          .value;
    case ShiftMode::exact:
      if (!state.shift_norm_exact)
        throw std::invalid_argument("state has no exact shift-norm function");
      return state.shift_norm_exact(std::abs(pulse.displacement(pulse.duration())))
          .value;
  }
  return state.generic_shift_constant;
}

BoundReport amplitude_upper_bound(BoundKind kind, const Pulse& pulse,
                                  const StateData& state,
                                  const BoundOptions& options) {
  BoundReport report;
  report.kind = kind;
  const double tau = pulse.duration();
  const double b = pulse.momentum_transfer(tau);
  const double c = pulse.displacement(tau);
  const double energy_transfer = 0.5 * b * b;

  const double t1 = options.drop_spreading ? 0.0 : shift_integral(pulse, state, options);
  const double t2 = std::abs(c) * state.pz_norm.value;

  double t3;
  if (kind == BoundKind::upper1) {
    if (!(energy_transfer < -state.energy)) {
      report.valid = false;
      report.validity_reason =
          "requires classical energy transfer b(tau)^2/2 < -E";
      return report;
    }
    t3 = std::abs(b) * state.pz_norm.value / (-state.energy - energy_transfer);
    report.terms = {{"shift_integral", t1},
                    {"displacement_dipole", t2},
                    {"momentum_resolvent", t3}};
  } else {
    t3 = std::abs(b) * state.z_norm.value;
    report.terms = {{"shift_integral", t1},
                    {"displacement_dipole", t2},
                    {"momentum_dipole", t3}};
  }

  const double amplitude = t1 + t2 + t3;
  report.valid = true;
  report.raw = amplitude * amplitude;
  report.clipped = clamp01(*report.raw);
  return report;
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper1: return "upper1";
    case BoundKind::upper2: return "upper2";
    case BoundKind::lower: return "lower";
    case BoundKind::pfeifer: return "pfeifer";
    case BoundKind::pert1: return "pert1";
  }
  return "unknown";
}

StateData hydrogen_state_data(const HydrogenState& s) {
  StateData data;
  data.energy = s.energy();
  const auto pz2 = pz_norm_sq(s);
  const auto z2 = z_norm_sq(s);
  data.pz_norm = {std::sqrt(pz2.value), pz2.exactness};
  data.z_norm = {std::sqrt(z2.value), z2.exactness};
  if (s.n() == 1) {
    data.generic_shift_constant = 2.0;
    data.shift_norm_estimate = [](double c) {
      return shift_difference_norm(c, ShiftNormMode::estimate);
    };
    data.shift_norm_exact = [](double c) {
      return shift_difference_norm(c, ShiftNormMode::exact);
    };
  } else {
    const double constant = generic_first_term_coefficient(s);
    data.generic_shift_constant = constant;
    data.shift_norm_estimate = [constant](double) {
      return MatrixElementValue{constant, Exactness::upper_estimate};
    };
    // No sharper per-shift value is available for excited states.
    data.shift_norm_exact = nullptr;
  }
  return data;
}

BoundReport upper_bound_1(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options) {
  return amplitude_upper_bound(BoundKind::upper1, pulse, state, options);
}

BoundReport upper_bound_2(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options) {
  return amplitude_upper_bound(BoundKind::upper2, pulse, state, options);
}

BoundReport lower_bound(const Pulse& pulse, const StateData& state,
                        const BoundOptions& options) {
  BoundReport report;
  report.kind = BoundKind::lower;
  const double tau = pulse.duration();
  const double b = pulse.momentum_transfer(tau);
  const double energy_transfer = 0.5 * b * b;
  if (!(energy_transfer > -state.energy)) {
    report.valid = false;
    report.validity_reason =
        "requires classical energy transfer b(tau)^2/2 > -E";
    return report;
  }
  const double delta = state.energy + energy_transfer;  // > 0 here
  const double t1 = options.drop_spreading ? 0.0 : shift_integral(pulse, state, options);
  const double t2 = final_shift_norm(pulse, state, options) / delta;
  const double t3 = std::abs(b) * state.pz_norm.value / delta;
  report.terms = {{"shift_integral", t1},
                  {"final_shift_norm", t2},
                  {"momentum_dipole", t3}};
  const double amplitude = t1 + t2 + t3;
  report.valid = true;
  report.raw = 1.0 - amplitude * amplitude;
  report.clipped = clamp01(*report.raw);
  return report;
}

BoundReport pfeifer_bound(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options) {
  (void)options;
  BoundReport report;
  report.kind = BoundKind::pfeifer;
  const double abs_integral = pulse.abs_field_integral(pulse.duration());
  const double amplitude = abs_integral * state.z_norm.value;
  report.terms = {{"abs_field_integral", abs_integral},
                  {"z_norm", state.z_norm.value}};
  report.valid = true;
  report.raw = amplitude * amplitude;
  report.clipped = clamp01(*report.raw);
  return report;
}

BoundReport first_order_pert_bound(const Pulse& pulse, const StateData& state,
                                   const BoundOptions& options) {
  (void)options;
  BoundReport report;
  report.kind = BoundKind::pert1;
  const double b = pulse.momentum_transfer(pulse.duration());
  const double amplitude = std::abs(b) * state.z_norm.value;
  report.terms = {{"momentum_transfer", std::abs(b)}, {"z_norm", state.z_norm.value}};
  report.valid = true;
  report.raw = amplitude * amplitude;
  report.clipped = clamp01(*report.raw);
  return report;
}

double stabilization_limit_check(const StateData& state, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const double floor = 1.0 - tau * tau * state.generic_shift_constant *
                                 state.generic_shift_constant;
  return std::max(0.0, floor);
}

}  // namespace ionbounds
