#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ionbounds {

/// One atomic unit of intensity in W/cm^2.
inline constexpr double kAtomicUnitIntensityWPerCm2 = 3.5e16;

/// Peak field amplitude (a.u.) for a given intensity in W/cm^2.
double intensity_to_field(double intensity_w_per_cm2);
/// Inverse of intensity_to_field.
double field_to_intensity(double field_au);

enum class PulseShape { cosine, cosine_ramped, constant, delta_kick, tabulated };

/// Classical integrals of the field at a given time: momentum transfer b,
/// displacement c, and the accumulated quadratic phase a = (1/2) int b^2.
struct PulseIntegrals {
  double b = 0.0;
  double c = 0.0;
  double a = 0.0;
  double at_time = 0.0;
};

/// Requested a pointwise value of a distributional (delta-kick) field.
class DistributionalPulseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two displacement formulas disagreed beyond tolerance.
class PulseConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linearly polarized electric field E(t) e_z supported on [0, tau],
/// atomic units throughout. Immutable after construction; all evaluation
/// methods are pure and safe to call concurrently.
///
/// Field models:
///   cosine         E0 cos(omega t)
///   cosine_ramped  E0 cos(omega t) with a sin^2 turn-on over ramp_cycles
///                  optical cycles, mirrored at turn-off
///   constant       E0
///   delta_kick     F0 delta(t); tau is stored as 0 and the momentum
///                  transfer takes its post-kick value F0 already at t = 0
///   tabulated      linear interpolation through (t, E) samples
class Pulse {
 public:
  static Pulse cosine(double e0, double omega, double tau);
  static Pulse cosine_ramped(double e0, double omega, double tau,
                             double ramp_cycles);
  static Pulse constant(double e0, double tau);
  static Pulse delta_kick(double f0);
  static Pulse tabulated(std::vector<std::pair<double, double>> samples,
                         double tau);

  PulseShape shape() const { return shape_; }
  double duration() const { return tau_; }
  double e0() const { return e0_; }
  double omega() const { return omega_; }
  double f0() const { return f0_; }
  double ramp_cycles() const { return ramp_cycles_; }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  /// Interior non-smooth points of E(t) within (0, tau).
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// E(t). Exactly zero outside [0, tau]. Throws DistributionalPulseError
  /// for delta kicks.
  double field(double t) const;

  /// b(t) = int_0^t E. Frozen at b(tau) for t > tau. Requires t >= 0.
  double momentum_transfer(double t) const;

  /// c(t) = int_0^t b. Grows linearly for t > tau when b(tau) != 0.
  /// Evaluates both c = int b and c = t b(t) - int s E(s) ds and throws
  /// PulseConsistencyError if they disagree beyond tolerance.
  double displacement(double t) const;

  /// a(t) = (1/2) int_0^t b^2. Nonnegative and nondecreasing.
  double volkov_phase(double t) const;

  /// (b, c, a) at time t.
  PulseIntegrals integrals(double t) const;

  /// int_0^min(t,tau) |E(s)| ds. For a delta kick this is |F0| for t >= 0.
  double abs_field_integral(double t) const;

  // Reference evaluations used by consistency checks and tests. They bypass
  // the closed forms and go through adaptive quadrature (nested where b has
  // no closed form). Not available for delta kicks.
  double momentum_transfer_by_quadrature(double t) const;
  double displacement_by_quadrature(double t) const;
  double volkov_phase_by_quadrature(double t) const;

  /// Both displacement routes: (int_0^t b, t b(t) - int_0^t s E(s) ds).
  std::pair<double, double> displacement_both(double t) const;

 private:
  Pulse() = default;

  bool has_closed_form() const;
  double field_unchecked(double t) const;

  PulseShape shape_ = PulseShape::constant;
  double e0_ = 0.0;
  double omega_ = 0.0;
  double tau_ = 0.0;
  double ramp_cycles_ = 0.0;
  double f0_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
  std::vector<double> breakpoints_;
};

}  // namespace ionbounds
