#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ionbounds/hydrogen.hpp"
#include "ionbounds/pulse.hpp"

namespace ionbounds {

enum class BoundKind { upper1, upper2, lower, pfeifer, pert1 };

const char* bound_kind_name(BoundKind kind);

struct NamedTerm {
  std::string name;
  double value = 0.0;
};

/// One evaluated bound. `raw` is the value on the probability scale before
/// clipping; it is absent when the bound's validity condition fails, in which
/// case `validity_reason` says why. Upper bounds clip from above at 1, the
/// lower bound clips from below at 0.
struct BoundReport {
  BoundKind kind = BoundKind::upper1;
  bool valid = false;
  std::string validity_reason;
  std::optional<double> raw;
  std::optional<double> clipped;
  std::vector<NamedTerm> terms;
};

/// How the shift-norm term (the only state-geometry-dependent ingredient) is
/// evaluated:
///   estimate    use the constant bound C: the time integral becomes tau * C
///   quadrature  integrate the per-shift upper estimate along c(t)
///   exact       integrate the exact shift norm along c(t)
enum class ShiftMode { estimate, quadrature, exact };

struct BoundOptions {
  bool drop_spreading = false;  // drop the field-independent shift-integral term
  ShiftMode shift_mode = ShiftMode::estimate;
};

/// Everything the bounds need to know about a bound state: its energy E < 0,
/// the norms ||p_z psi|| and ||z psi|| (possibly upper estimates), the shift
/// norm ||(V(x - c e_z) - V) psi|| as a function of the shift distance, and a
/// constant C dominating the shift norm for every shift.
struct StateData {
  double energy = -0.5;
  MatrixElementValue pz_norm{};
  MatrixElementValue z_norm{};
  std::function<MatrixElementValue(double)> shift_norm_estimate;
  std::function<MatrixElementValue(double)> shift_norm_exact;  // may be empty
  double generic_shift_constant = 2.0;
};

/// StateData for a hydrogen eigenstate. The ground state gets the sharp
/// constant C = 2 and the shifted-Coulomb norm functions; excited states get
/// the resolvent-based constant, which is all the closed forms provide.
StateData hydrogen_state_data(const HydrogenState& s);

/// Amplitude-level upper bound valid when the classical energy transfer
/// (1/2) b(tau)^2 is below the binding energy -E:
///   I^{1/2} <= T1 + |c(tau)| ||p_z psi|| + |b(tau)| ||p_z psi|| / (-E - b^2/2)
BoundReport upper_bound_1(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options = {});

/// Upper bound valid without restriction; differs from upper_bound_1 only in
/// the last term, |b(tau)| ||z psi||.
BoundReport upper_bound_2(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options = {});

/// Lower bound valid when (1/2) b(tau)^2 exceeds -E:
///   I >= 1 - [T1 + S(c(tau))/(E + b^2/2) + |b| ||p_z psi||/(E + b^2/2)]^2
/// For short strong pulses this approaches 1: increasing the field strength
/// cannot stabilize the state.
BoundReport lower_bound(const Pulse& pulse, const StateData& state,
                        const BoundOptions& options = {});

/// Time-energy uncertainty bound (int |E|)^2 ||z psi||^2. Uses ||z psi|| for
/// the dipole spread a_psi = (||z psi||^2 - <z>^2)^{1/2}; for hydrogen
/// eigenstates <z> vanishes by parity, so nothing is given away.
BoundReport pfeifer_bound(const Pulse& pulse, const StateData& state,
                          const BoundOptions& options = {});

/// Computable upper version of the first-order perturbative ionization
/// probability: b(tau)^2 ||z psi||^2 (the projected norm ||P z psi|| is
/// replaced by its bound ||z psi||). Never exceeds the Pfeifer bound.
BoundReport first_order_pert_bound(const Pulse& pulse, const StateData& state,
                                   const BoundOptions& options = {});

/// Floor of the lower bound as the field strength grows without limit at
/// fixed duration: max(0, 1 - (tau C)^2) with C the generic shift constant.
double stabilization_limit_check(const StateData& state, double tau);

}  // namespace ionbounds
