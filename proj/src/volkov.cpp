#include "ionbounds/volkov.hpp"

#include <cmath>
#include <numbers>

namespace ionbounds {

namespace {

constexpr double kPi = std::numbers::pi;

using Complex = std::complex<double>;

// (2 pi i dt)^{-p/2} on the principal branch: modulus (2 pi |dt|)^{-p/2},
// phase -(p pi / 4) sign(dt).
Complex inverse_sqrt_prefactor(double dt, int p) {
  const double modulus = std::pow(2.0 * kPi * std::abs(dt), -0.5 * p);
  const double phase = -0.25 * kPi * p * (dt > 0.0 ? 1.0 : -1.0);
  return std::polar(modulus, phase);
}

Complex phase_factor(double phase) { return std::polar(1.0, phase); }

long wrap_index(long j, long n) {
  long r = j % n;
  return r < 0 ? r + n : r;
}

// Fractional circular shift by s grid steps via the discrete Fourier basis.
std::vector<Complex> fractional_shift(const std::vector<Complex>& v, double s) {
  const long n = static_cast<long>(v.size());
  std::vector<Complex> spectrum(n);
  for (long m = 0; m < n; ++m) {
    Complex acc = 0.0;
    for (long j = 0; j < n; ++j)
      acc += v[j] * std::polar(1.0, -2.0 * kPi * m * j / n);
    spectrum[m] = acc / static_cast<double>(n);
  }
  std::vector<Complex> out(n);
  for (long j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (long m = 0; m < n; ++m) {
      // Signed frequency, so the interpolant is band limited around zero.
      const long f = m <= n / 2 ? m : m - n;
      acc += spectrum[m] * std::polar(1.0, 2.0 * kPi * f * (j - s) / n);
    }
    out[j] = acc;
  }
  return out;
}

std::vector<Complex> shift_samples(const std::vector<Complex>& v, double steps) {
  const long n = static_cast<long>(v.size());
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) < 1e-9) {
    const long k = static_cast<long>(rounded);
    std::vector<Complex> out(n);
    for (long j = 0; j < n; ++j) out[j] = v[wrap_index(j - k, n)];
    return out;
  }
  return fractional_shift(v, steps);
}

}  // namespace

VolkovKernelParams VolkovKernelParams::from_pulse(const Pulse& pulse, double t,
                                                  double t_prime) {
  const auto at = pulse.integrals(t);
  const auto atp = pulse.integrals(t_prime);
  return {t, t_prime, at.b, atp.b, at.c, atp.c, at.a, atp.a};
}

Complex free_kernel_1d(double z, double t, double z_prime, double t_prime) {
  if (t == t_prime)
    throw DistributionalLimitError("free kernel at coincident times is a delta");
  const double dt = t - t_prime;
  const double dz = z - z_prime;
  return inverse_sqrt_prefactor(dt, 1) * phase_factor(dz * dz / (2.0 * dt));
}

Complex free_kernel(const std::array<double, 3>& x, double t,
                    const std::array<double, 3>& x_prime, double t_prime) {
  if (t == t_prime)
    throw DistributionalLimitError("free kernel at coincident times is a delta");
  const double dt = t - t_prime;
  double dist_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = x[i] - x_prime[i];
    dist_sq += d * d;
  }
  return inverse_sqrt_prefactor(dt, 3) * phase_factor(dist_sq / (2.0 * dt));
}

Complex volkov_kernel_1d(GaugeFrame frame, const VolkovKernelParams& params,
                         double z, double z_prime) {
  if (frame == GaugeFrame::kramers_henneberger)
    throw std::invalid_argument(
        "the kernel in the Kramers-Henneberger frame is the free kernel");
  if (params.t == params.t_prime)
    throw DistributionalLimitError("kernel at coincident times is a delta");
  const double dt = params.t - params.t_prime;
  const double dz = (z - params.c_t) - (z_prime - params.c_tp);
  double phase = (params.a_tp - params.a_t) + dz * dz / (2.0 * dt);
  if (frame == GaugeFrame::length)
    phase += params.b_tp * z_prime - params.b_t * z;
  return inverse_sqrt_prefactor(dt, 1) * phase_factor(phase);
}

Complex volkov_kernel(GaugeFrame frame, const VolkovKernelParams& params,
                      const std::array<double, 3>& x,
                      const std::array<double, 3>& x_prime) {
  // Separable: free transverse factors times the 1-D z kernel.
  Complex transverse = free_kernel_1d(x[0], params.t, x_prime[0], params.t_prime) *
                       free_kernel_1d(x[1], params.t, x_prime[1], params.t_prime);
  return transverse * volkov_kernel_1d(frame, params, x[2], x_prime[2]);
}

SampledWave::SampledWave(double z_min_in, double z_max_in,
                         std::vector<Complex> values_in)
    : z_min(z_min_in), z_max(z_max_in), values(std::move(values_in)) {
  if (!(z_max > z_min)) throw std::invalid_argument("sampled wave: z_max must exceed z_min");
  if (values.size() < 2) throw std::invalid_argument("sampled wave: need at least 2 points");
}

double SampledWave::norm() const {
  double sum = 0.0;
  for (const auto& v : values) sum += std::norm(v);
  return std::sqrt(grid_step() * sum);
}

SampledWave kh_transform(const SampledWave& wave, double b, double c, double a,
                         bool inverse) {
  if (std::abs(c) > wave.span())
    throw std::invalid_argument("kh_transform: shift exceeds the grid span");
  const double steps = c / wave.grid_step();
  std::vector<Complex> out;
  if (!inverse) {
    out = shift_samples(wave.values, steps);
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] *= phase_factor(-a - b * wave.z_at(j));
  } else {
    out = wave.values;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] *= phase_factor(a + b * wave.z_at(j));
    out = shift_samples(out, -steps);
  }
  return SampledWave(wave.z_min, wave.z_max, std::move(out));
}

GaugeTransform gauge_identity(GaugeFrame frame) { return {frame, frame, 0.0, 0.0, 0.0}; }

GaugeTransform gauge_compose(const GaugeTransform& g1, const GaugeTransform& g2) {
  if (g2.to != g1.from)
    throw std::invalid_argument("gauge_compose: incompatible frames");
  GaugeTransform g;
  g.from = g2.from;
  g.to = g1.to;
  // (g1 g2) psi(z) = e^{i a1} e^{i b1 z} e^{i a2} e^{i b2 (z - s1)} psi(z - s1 - s2)
  g.phase = g1.phase + g2.phase - g2.z_slope * g1.shift;
  g.z_slope = g1.z_slope + g2.z_slope;
  g.shift = g1.shift + g2.shift;
  return g;
}

GaugeTransform gauge_inverse(const GaugeTransform& g) {
  GaugeTransform inv;
  inv.from = g.to;
  inv.to = g.from;
  inv.phase = -g.phase - g.z_slope * g.shift;
  inv.z_slope = -g.z_slope;
  inv.shift = -g.shift;
  return inv;
}

GaugeTransform gauge_between(GaugeFrame to, GaugeFrame from,
                             const PulseIntegrals& integrals) {
  if (to == from) return gauge_identity(to);
  const GaugeTransform velocity_from_length{GaugeFrame::length, GaugeFrame::velocity,
                                            0.0, integrals.b, 0.0};
  const GaugeTransform length_from_kh{GaugeFrame::kramers_henneberger,
                                      GaugeFrame::length, -integrals.a, -integrals.b,
                                      integrals.c};
  auto resolve = [&](GaugeFrame target, GaugeFrame source) -> GaugeTransform {
    if (source == GaugeFrame::length && target == GaugeFrame::velocity)
      return velocity_from_length;
    if (source == GaugeFrame::kramers_henneberger && target == GaugeFrame::length)
      return length_from_kh;
    if (source == GaugeFrame::kramers_henneberger && target == GaugeFrame::velocity)
      return gauge_compose(velocity_from_length, length_from_kh);
    throw std::invalid_argument("gauge_between: unsupported frame pair");
  };
  switch (from) {
    case GaugeFrame::length:
      if (to == GaugeFrame::velocity) return resolve(to, from);
      return gauge_inverse(resolve(from, to));
    case GaugeFrame::velocity:
      return gauge_inverse(resolve(from, to));
    case GaugeFrame::kramers_henneberger:
      return resolve(to, from);
  }
  throw std::invalid_argument("gauge_between: unsupported frame pair");
}

SampledWave apply_gauge_transform(const GaugeTransform& g, const SampledWave& wave) {
  if (std::abs(g.shift) > wave.span())
    throw std::invalid_argument("gauge transform: shift exceeds the grid span");
  const double steps = g.shift / wave.grid_step();
  std::vector<Complex> out = shift_samples(wave.values, steps);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] *= phase_factor(g.phase + g.z_slope * wave.z_at(j));
  return SampledWave(wave.z_min, wave.z_max, std::move(out));
}

}  // namespace ionbounds
