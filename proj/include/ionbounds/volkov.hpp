#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ionbounds/pulse.hpp"

namespace ionbounds {

/// The three frames related by the field gauge transformations: length
/// (electric-field) gauge, velocity gauge, and the accelerated
/// Kramers-Henneberger frame in which the potential is translated.
enum class GaugeFrame { length, velocity, kramers_henneberger };

/// Requested a propagator kernel at coincident times; the kernel is a delta
/// distribution there, not a function.
class DistributionalLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The field integrals (b, c, a) at the two times that fully determine a
/// free-in-field propagator kernel.
struct VolkovKernelParams {
  double t = 0.0;
  double t_prime = 0.0;
  double b_t = 0.0, b_tp = 0.0;
  double c_t = 0.0, c_tp = 0.0;
  double a_t = 0.0, a_tp = 0.0;

  static VolkovKernelParams from_pulse(const Pulse& pulse, double t, double t_prime);
};

/// Free-particle propagator kernel
///   (2 pi i (t-t'))^{-3/2} exp(i (x-x')^2 / (2(t-t'))),
/// principal branch: the prefactor phase is -(3 pi/4) sign(t-t').
std::complex<double> free_kernel(const std::array<double, 3>& x, double t,
                                 const std::array<double, 3>& x_prime, double t_prime);

/// One-dimensional factor of the free kernel (prefactor phase -(pi/4) sign).
std::complex<double> free_kernel_1d(double z, double t, double z_prime, double t_prime);

/// Propagator kernel of a free particle in the field, in the length or
/// velocity gauge. Both are the free kernel with its z-argument shifted by
/// the displacement and multiplied by pure phases:
///   length:   exp(i(a(t')-a(t))) exp(i(b(t')z' - b(t)z))
///             * free((x - c(t) e_z), t; (x' - c(t') e_z), t')
///   velocity: the same without the b-dependent phase.
/// The modulus is field-independent. Throws for t == t'.
std::complex<double> volkov_kernel(GaugeFrame frame, const VolkovKernelParams& params,
                                   const std::array<double, 3>& x,
                                   const std::array<double, 3>& x_prime);

/// z-axis factor of volkov_kernel; the transverse factors are free.
std::complex<double> volkov_kernel_1d(GaugeFrame frame, const VolkovKernelParams& params,
                                      double z, double z_prime);

/// Complex amplitudes sampled on a uniform periodic z-grid: node j sits at
/// z_min + j h with h = (z_max - z_min) / n, so z_max wraps back to z_min.
struct SampledWave {
  double z_min = 0.0;
  double z_max = 1.0;
  std::vector<std::complex<double>> values;

  SampledWave(double z_min, double z_max, std::vector<std::complex<double>> values);

  std::size_t size() const { return values.size(); }
  double grid_step() const { return (z_max - z_min) / static_cast<double>(values.size()); }
  double z_at(std::size_t j) const { return z_min + static_cast<double>(j) * grid_step(); }
  double span() const { return z_max - z_min; }

  /// Discrete L2 norm sqrt(h sum |v|^2).
  double norm() const;
};

/// Applies the frame transformation with parameters (b, c, a) to a sampled
/// wave: translate by c along z, then multiply by exp(-i a) exp(-i b z).
/// The inverse applies the inverse factors in reverse order. Shifts
/// commensurate with the grid are exact sample permutations; fractional
/// shifts use band-limited (discrete Fourier) interpolation on the periodic
/// grid. A shift exceeding the grid span is refused.
SampledWave kh_transform(const SampledWave& wave, double b, double c, double a,
                         bool inverse = false);

/// A gauge transformation between two frames, acting on wave functions as
///   psi(z) -> exp(i phase) exp(i z_slope z) psi(z - shift).
struct GaugeTransform {
  GaugeFrame from = GaugeFrame::length;
  GaugeFrame to = GaugeFrame::length;
  double phase = 0.0;
  double z_slope = 0.0;
  double shift = 0.0;
};

GaugeTransform gauge_identity(GaugeFrame frame);

/// The transformation mapping solutions in `from` to solutions in `to`,
/// given the field integrals at one time. Built from the two generators
///   velocity <- length:             slope b
///   length   <- kramers_henneberger: phase -a, slope -b, shift c
/// and the group laws (inverse and composition).
GaugeTransform gauge_between(GaugeFrame to, GaugeFrame from, const PulseIntegrals& integrals);

/// Composition g1 after g2. Requires g2.to == g1.from.
GaugeTransform gauge_compose(const GaugeTransform& g1, const GaugeTransform& g2);

GaugeTransform gauge_inverse(const GaugeTransform& g);

/// Applies a gauge transform to a sampled wave (same conventions as
/// kh_transform).
SampledWave apply_gauge_transform(const GaugeTransform& g, const SampledWave& wave);

}  // namespace ionbounds
