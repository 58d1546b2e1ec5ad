#include "ionbounds/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ionbounds/quadrature.hpp"

namespace ionbounds {

namespace {

constexpr double kPi = std::numbers::pi;

double ramp_duration(double omega, double ramp_cycles) {
  return ramp_cycles * 2.0 * kPi / omega;
}

// Zeros of cos(omega t) in (0, limit), used as |E| kink breakpoints.
void append_cosine_zeros(double omega, double limit, std::vector<double>* out) {
  const double half_period = kPi / omega;
  double z = 0.5 * half_period;
  while (z < limit) {
    out->push_back(z);
    z += half_period;
  }
}

}  // namespace

double intensity_to_field(double intensity_w_per_cm2) {
  if (intensity_w_per_cm2 < 0.0)
    throw std::invalid_argument("intensity must be nonnegative");
  return std::sqrt(intensity_w_per_cm2 / kAtomicUnitIntensityWPerCm2);
}

double field_to_intensity(double field_au) {
  if (field_au < 0.0) throw std::invalid_argument("field must be nonnegative");
  return field_au * field_au * kAtomicUnitIntensityWPerCm2;
}

Pulse Pulse::cosine(double e0, double omega, double tau) {
  if (!(omega > 0.0)) throw std::invalid_argument("cosine pulse: omega must be > 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("pulse duration must be >= 0");
  Pulse p;
  p.shape_ = PulseShape::cosine;
  p.e0_ = e0;
  p.omega_ = omega;
  p.tau_ = tau;
  return p;
}

Pulse Pulse::cosine_ramped(double e0, double omega, double tau, double ramp_cycles) {
  if (!(omega > 0.0)) throw std::invalid_argument("ramped pulse: omega must be > 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("pulse duration must be >= 0");
  if (!(ramp_cycles > 0.0))
    throw std::invalid_argument("ramped pulse: ramp_cycles must be > 0");
  const double tr = ramp_duration(omega, ramp_cycles);
  if (2.0 * tr > tau)
    throw std::invalid_argument("ramped pulse: ramps longer than the pulse");
  Pulse p;
  p.shape_ = PulseShape::cosine_ramped;
  p.e0_ = e0;
  p.omega_ = omega;
  p.tau_ = tau;
  p.ramp_cycles_ = ramp_cycles;
  p.breakpoints_ = {tr, tau - tr};
  return p;
}

Pulse Pulse::constant(double e0, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("pulse duration must be >= 0");
  Pulse p;
  p.shape_ = PulseShape::constant;
  p.e0_ = e0;
  p.tau_ = tau;
  return p;
}

Pulse Pulse::delta_kick(double f0) {
  Pulse p;
  p.shape_ = PulseShape::delta_kick;
  p.f0_ = f0;
  p.tau_ = 0.0;
  return p;
}

Pulse Pulse::tabulated(std::vector<std::pair<double, double>> samples, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("pulse duration must be >= 0");
  if (samples.size() < 2)
    throw std::invalid_argument("tabulated pulse: need at least two samples");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first < 0.0 || samples[i].first > tau)
      throw std::invalid_argument("tabulated pulse: sample time outside [0, tau]");
    if (i > 0 && !(samples[i - 1].first < samples[i].first))
      throw std::invalid_argument("tabulated pulse: sample times must be strictly increasing");
  }
  Pulse p;
  p.shape_ = PulseShape::tabulated;
  p.tau_ = tau;
  p.samples_ = std::move(samples);
  for (const auto& [t, e] : p.samples_) {
    if (t > 0.0 && t < tau) p.breakpoints_.push_back(t);
    (void)e;
  }
  return p;
}

bool Pulse::has_closed_form() const {
  return shape_ == PulseShape::cosine || shape_ == PulseShape::constant ||
         shape_ == PulseShape::delta_kick;
}

double Pulse::field_unchecked(double t) const {
  switch (shape_) {
    case PulseShape::cosine:
      return e0_ * std::cos(omega_ * t);
    case PulseShape::cosine_ramped: {
      const double tr = ramp_duration(omega_, ramp_cycles_);
      double env = 1.0;
      if (t < tr) {
        const double s = std::sin(kPi * t / (2.0 * tr));
        env = s * s;
      } else if (t > tau_ - tr) {
        const double s = std::sin(kPi * (tau_ - t) / (2.0 * tr));
        env = s * s;
      }
      return e0_ * env * std::cos(omega_ * t);
    }
    case PulseShape::constant:
      return e0_;
    case PulseShape::tabulated: {
      if (t < samples_.front().first || t > samples_.back().first) return 0.0;
      auto it = std::upper_bound(
          samples_.begin(), samples_.end(), t,
          [](double lhs, const std::pair<double, double>& s) { return lhs < s.first; });
      if (it == samples_.begin()) return samples_.front().second;
      if (it == samples_.end()) return samples_.back().second;
      const auto& [t1, e1] = *(it - 1);
      const auto& [t2, e2] = *it;
      return e1 + (e2 - e1) * (t - t1) / (t2 - t1);
    }
    case PulseShape::delta_kick:
      break;
  }
  throw DistributionalPulseError("delta kick has no pointwise field value");
}

double Pulse::field(double t) const {
  if (shape_ == PulseShape::delta_kick)
    throw DistributionalPulseError("delta kick has no pointwise field value");
  if (t < 0.0 || t > tau_) return 0.0;
  return field_unchecked(t);
}

double Pulse::momentum_transfer(double t) const {
  if (t < 0.0) throw std::invalid_argument("momentum_transfer: requires t >= 0");
  const double te = std::min(t, tau_);
  switch (shape_) {
    case PulseShape::cosine:
      return (e0_ / omega_) * std::sin(omega_ * te);
    case PulseShape::constant:
      return e0_ * te;
    case PulseShape::delta_kick:
      return f0_;
    default:
      return momentum_transfer_by_quadrature(t);
  }
}

double Pulse::momentum_transfer_by_quadrature(double t) const {
  if (t < 0.0) throw std::invalid_argument("momentum_transfer: requires t >= 0");
  if (shape_ == PulseShape::delta_kick)
    throw DistributionalPulseError("delta kick integrals are analytic only");
  const double te = std::min(t, tau_);
  if (te == 0.0) return 0.0;
  auto result = integrate([this](double s) { return field_unchecked(s); }, 0.0,
                          te, breakpoints_);
  return result.value;
}

std::pair<double, double> Pulse::displacement_both(double t) const {
  if (t < 0.0) throw std::invalid_argument("displacement: requires t >= 0");

  if (shape_ == PulseShape::delta_kick) {
    // Both routes collapse to F0 t: the s E(s) moment of the kick vanishes.
    return {f0_ * t, f0_ * t};
  }

  const double te = std::min(t, tau_);
  double first;
  switch (shape_) {
    case PulseShape::cosine: {
      const double s = std::sin(0.5 * omega_ * te);
      first = (2.0 * e0_ / (omega_ * omega_)) * s * s;
      break;
    }
    case PulseShape::constant:
      first = 0.5 * e0_ * te * te;
      break;
    default: {
      auto r = integrate([this](double s) { return momentum_transfer(s); }, 0.0,
                         te, breakpoints_);
      first = r.value;
      break;
    }
  }
  if (t > tau_) first += (t - tau_) * momentum_transfer(tau_);

  double moment = 0.0;
  if (te > 0.0) {
    moment = integrate([this](double s) { return s * field_unchecked(s); }, 0.0,
                       te, breakpoints_)
                 .value;
  }
  const double second = t * momentum_transfer(t) - moment;
  return {first, second};
}

double Pulse::displacement(double t) const {
  auto [first, second] = displacement_both(t);
  const double tol = 1e-9 * std::max(1.0, std::abs(first));
  if (std::abs(first - second) > tol)
    throw PulseConsistencyError("displacement formulas disagree beyond tolerance");
  return first;
}

double Pulse::displacement_by_quadrature(double t) const {
  if (t < 0.0) throw std::invalid_argument("displacement: requires t >= 0");
  if (shape_ == PulseShape::delta_kick)
    throw DistributionalPulseError("delta kick integrals are analytic only");
  if (t == 0.0) return 0.0;
  std::vector<double> cuts = breakpoints_;
  if (tau_ < t) cuts.push_back(tau_);
  auto r = integrate(
      [this](double s) { return momentum_transfer_by_quadrature(s); }, 0.0, t,
      cuts);
  return r.value;
}

double Pulse::volkov_phase(double t) const {
  if (t < 0.0) throw std::invalid_argument("volkov_phase: requires t >= 0");
  const double te = std::min(t, tau_);
  double a;
  switch (shape_) {
    case PulseShape::cosine: {
      // (1/2) (E0/omega)^2 int sin^2 = (E0^2 / (2 omega^2)) (t/2 - sin(2 w t)/(4 w))
      const double amp = e0_ / omega_;
      a = 0.5 * amp * amp * (0.5 * te - std::sin(2.0 * omega_ * te) / (4.0 * omega_));
      break;
    }
    case PulseShape::constant:
      a = e0_ * e0_ * te * te * te / 6.0;
      break;
    case PulseShape::delta_kick:
      return 0.5 * f0_ * f0_ * t;
    default: {
      if (te == 0.0) {
        a = 0.0;
        break;
      }
      auto r = integrate(
          [this](double s) {
            const double b = momentum_transfer(s);
            return b * b;
          },
          0.0, te, breakpoints_);
      a = 0.5 * r.value;
      break;
    }
  }
  if (t > tau_) {
    const double b = momentum_transfer(tau_);
    a += 0.5 * b * b * (t - tau_);
  }
  return a;
}

double Pulse::volkov_phase_by_quadrature(double t) const {
  if (t < 0.0) throw std::invalid_argument("volkov_phase: requires t >= 0");
  if (shape_ == PulseShape::delta_kick)
    throw DistributionalPulseError("delta kick integrals are analytic only");
  if (t == 0.0) return 0.0;
  std::vector<double> cuts = breakpoints_;
  if (tau_ < t) cuts.push_back(tau_);
  auto r = integrate(
      [this](double s) {
        const double b = momentum_transfer_by_quadrature(s);
        return b * b;
      },
      0.0, t, cuts);
  return 0.5 * r.value;
}

PulseIntegrals Pulse::integrals(double t) const {
  return {momentum_transfer(t), displacement(t), volkov_phase(t), t};
}

double Pulse::abs_field_integral(double t) const {
  if (t < 0.0) throw std::invalid_argument("abs_field_integral: requires t >= 0");
  if (shape_ == PulseShape::delta_kick) return std::abs(f0_);
  const double te = std::min(t, tau_);
  if (te == 0.0) return 0.0;
  std::vector<double> cuts = breakpoints_;
  switch (shape_) {
    case PulseShape::cosine:
    case PulseShape::cosine_ramped:
      append_cosine_zeros(omega_, te, &cuts);
      break;
    case PulseShape::tabulated:
      // Sign changes of the linear interpolant.
      for (size_t i = 1; i < samples_.size(); ++i) {
        const auto& [t1, e1] = samples_[i - 1];
        const auto& [t2, e2] = samples_[i];
        if (e1 * e2 < 0.0) cuts.push_back(t1 + (t2 - t1) * e1 / (e1 - e2));
      }
      break;
    default:
      break;
  }
  auto r = integrate([this](double s) { return std::abs(field_unchecked(s)); },
                     0.0, te, cuts);
  return r.value;
}

}  // namespace ionbounds
