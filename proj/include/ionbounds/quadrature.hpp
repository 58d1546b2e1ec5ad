#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace ionbounds {

/// Result of an adaptive quadrature evaluation.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute error estimate, >= 0
  long evaluations = 0;         // integrand calls
};

/// Thrown when the panel budget is exhausted before the requested tolerance
/// is met. Carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 10000;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [lo, hi].
/// Deterministic: identical inputs produce identical results.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

/// Same, with known interior non-smooth points. Each smooth piece starts as
/// its own panel; points outside (lo, hi) are ignored.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& opts = {});

/// Integral of f over [lo, inf) for integrands decaying at least like
/// exp(-decay_rate * r). Uses the substitution u = 1 - exp(-decay_rate*(r-lo))
/// mapping onto the unit interval; the Kronrod nodes never touch u = 1.
QuadratureResult integrate_semi_infinite(const Integrand& f, double lo,
                                         double decay_rate,
                                         const QuadratureOptions& opts = {});

}  // namespace ionbounds
