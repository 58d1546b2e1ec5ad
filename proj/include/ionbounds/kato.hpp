#pragma once

#include <stdexcept>

#include "ionbounds/hydrogen.hpp"

namespace ionbounds {

/// Parameters of the two-parameter Coulomb resolvent-norm bound.
struct ResolventBoundParams {
  double rho = 1.0;
  double R = 1.0;
};

/// The bound pi sqrt(2) R^{1/2} / rho + sqrt(pi/2) rho^3 + 1/R on the
/// operator norm of (1/r)(-Laplacian + 1)^{-1}. Valid for all rho, R > 0;
/// strictly convex in each variable separately.
double resolvent_bound(const ResolventBoundParams& params);

/// The exact minimum of resolvent_bound over rho, R > 0:
/// 11 pi^{7/11} / (2^{6/11} 3^{9/11}) ~= 6.3563. Often quoted rounded down
/// to 6.35.
double resolvent_bound_closed_form();

struct ResolventOptimum {
  ResolventBoundParams params;
  double value = 0.0;
  int iterations = 0;
};

/// Minimizes resolvent_bound numerically by coordinate descent on the two
/// closed-form partial minimizers. Throws std::runtime_error if the iteration
/// fails to settle.
ResolventOptimum optimize_resolvent_bound();

/// Field-strength-independent coefficient K(n, l) such that the shift-norm
/// term of the ionization bounds is at most K * tau for the (n, l, m)
/// eigenstate:
///   K = C ||(2 H0 + 1) psi|| + ||V psi||,
/// with C the optimized resolvent constant and ||V psi|| = <1/r^2>^{1/2}.
/// Independent of the shift by translation invariance of the Laplacian.
/// At most 19.4 for every n, decreasing towards the resolvent constant.
double generic_first_term_coefficient(const HydrogenState& s);

}  // namespace ionbounds
