#pragma once

#include <stdexcept>

namespace ionbounds {

enum class Exactness { exact, upper_estimate };

/// A matrix-element (or norm) value together with whether it is the exact
/// quantity or only a rigorous upper estimate of it.
struct MatrixElementValue {
  double value = 0.0;
  Exactness exactness = Exactness::exact;
};

/// Bound-state quantum numbers (n, l, m) of the hydrogen atom.
class HydrogenState {
 public:
  HydrogenState(int n, int l, int m) : n_(n), l_(l), m_(m) {
    if (n < 1) throw std::invalid_argument("hydrogen state: n must be >= 1");
    if (l < 0 || l >= n)
      throw std::invalid_argument("hydrogen state: l must satisfy 0 <= l < n");
    if (m < -l || m > l)
      throw std::invalid_argument("hydrogen state: |m| must be <= l");
  }

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }

  /// Binding energy -1/(2 n^2) hartree.
  double energy() const { return -0.5 / (static_cast<double>(n_) * n_); }

 private:
  int n_, l_, m_;
};

// Closed-form expectation values in the (n, l, m) eigenstate.
double inv_r_mean(const HydrogenState& s);   // <1/r>   = 1/n^2
double inv_r2_mean(const HydrogenState& s);  // <1/r^2> = 1/(n^3 (l + 1/2))
double r2_mean(const HydrogenState& s);      // <r^2>   = (n^2/2)(5n^2 + 1 - 3l(l+1))

/// ||p_z psi||^2. Exact 1/(3 n^2) for s states; otherwise the upper estimate
/// 2<H0> = 1/n^2 (virial theorem).
MatrixElementValue pz_norm_sq(const HydrogenState& s);

/// ||z psi||^2. Exact <r^2>/3 for s states; otherwise the upper estimate <r^2>.
MatrixElementValue z_norm_sq(const HydrogenState& s);

/// ||(2 H0 + 1) psi||^2 = 1 - 1/n^4 + 4/(n^3 (l + 1/2)).
double h0_shift_norm_sq(const HydrogenState& s);

// Ground-state means of the Coulomb potential shifted by a distance c >= 0
// along z. Both are positive, equal to <1/r> resp. <1/r^2> at c = 0, and
// strictly decreasing in c.

/// N1(c) = -<psi_100 | V(x - c e_z) | psi_100>, evaluated by quadrature of
/// the radial multipole integrals. Below c = 1e-6 a series expansion is used
/// (the quadrature form has a removable 1/c cancellation).
double coulomb_mean_shifted(double c);

/// Closed form (1 - e^{-2c}(1 + c)) / c of N1, kept as an independent
/// reference for the quadrature route.
double coulomb_mean_shifted_closed_form(double c);

/// N2(c) = <psi_100 | V(x - c e_z)^2 | psi_100>, by quadrature with the
/// integrable logarithmic singularity at r = c declared as a breakpoint.
/// Below c = 1e-6 the limit value <1/r^2> = 2 is returned.
double coulomb_sq_mean_shifted(double c);

/// Cross term <psi_100 | V(x - c e_z) V(x) | psi_100> >= 0, by 2-D quadrature
/// over (r, cos theta) using azimuthal symmetry.
double coulomb_cross_mean_shifted(double c);

enum class ShiftNormMode {
  estimate,  // sqrt(N2(c) + 2), dropping the nonnegative cross term; <= 2
  exact      // full square including the cross term
};

/// ||(V(x - c e_z) - V(x)) psi_100|| or its upper estimate.
MatrixElementValue shift_difference_norm(double c, ShiftNormMode mode);

}  // namespace ionbounds
