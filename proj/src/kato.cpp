#include "ionbounds/kato.hpp"

#include <cmath>
#include <numbers>

namespace ionbounds {

namespace {
constexpr double kPi = std::numbers::pi;
}

double resolvent_bound(const ResolventBoundParams& params) {
  if (!(params.rho > 0.0) || !(params.R > 0.0))
    throw std::invalid_argument("resolvent_bound: rho and R must be positive");
  return kPi * std::sqrt(2.0) * std::sqrt(params.R) / params.rho +
         std::sqrt(kPi / 2.0) * params.rho * params.rho * params.rho +
         1.0 / params.R;
}

double resolvent_bound_closed_form() {
  return 11.0 * std::pow(kPi, 7.0 / 11.0) /
         (std::pow(2.0, 6.0 / 11.0) * std::pow(3.0, 9.0 / 11.0));
}

ResolventOptimum optimize_resolvent_bound() {
  // Each variable has an explicit conditional minimizer:
  //   R(rho)  = (sqrt(2) rho / pi)^{2/3}
  //   rho(R)  = ((2 sqrt(pi) / 3) sqrt(R))^{1/4}
  // Alternating them is a contraction (the combined exponent is 1/12).
  double rho = 1.0, R = 1.0;
  double value = resolvent_bound({rho, R});
  for (int it = 1; it <= 200; ++it) {
    R = std::pow(std::sqrt(2.0) * rho / kPi, 2.0 / 3.0);
    rho = std::pow(2.0 * std::sqrt(kPi) * std::sqrt(R) / 3.0, 0.25);
    const double next = resolvent_bound({rho, R});
    if (std::abs(next - value) <= 4.0 * 1e-16 * std::abs(next) && it > 2)
      return {{rho, R}, next, it};
    value = next;
  }
  throw std::runtime_error("resolvent-bound optimization did not converge");
}

double generic_first_term_coefficient(const HydrogenState& s) {
  return resolvent_bound_closed_form() * std::sqrt(h0_shift_norm_sq(s)) +
         std::sqrt(inv_r2_mean(s));
}

}  // namespace ionbounds
