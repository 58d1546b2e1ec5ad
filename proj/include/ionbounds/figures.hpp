#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "ionbounds/bounds.hpp"

namespace ionbounds {

// Reference curves for the ground state driven by E0 cos(omega t): the
// clipped upper and lower bound over one optical cycle at omega = 1.5 for
// E0 = 5, 10, 20, with the field-independent spreading term dropped.
inline constexpr double kFigure1Omega = 1.5;
inline constexpr std::array<double, 3> kFigure1FieldStrengths{5.0, 10.0, 20.0};

struct BoundCurvePoint {
  double upper_raw = 0.0;
  double upper_clipped = 0.0;
  bool lower_valid = false;
  double lower_raw = 0.0;      // NaN when invalid
  double lower_clipped = 0.0;  // NaN when invalid
};

struct Figure1Row {
  double tau = 0.0;
  std::array<BoundCurvePoint, 3> per_field;
};

std::vector<Figure1Row> figure1_data(int n_points = 400);
void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows);

// Upper bound over the first four cycles of 10 cos(50 t), including the
// spreading term by default.
inline constexpr double kFigure2Omega = 50.0;
inline constexpr double kFigure2FieldStrength = 10.0;

struct Figure2Row {
  double tau = 0.0;
  double upper_raw = 0.0;
  double upper_clipped = 0.0;
};

std::vector<Figure2Row> figure2_data(int n_points = 400, bool include_spreading = true);
void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows);

/// All five bounds for one pulse/state.
std::array<BoundReport, 5> evaluate_all_bounds(const Pulse& pulse,
                                               const StateData& state,
                                               const BoundOptions& options = {});

void write_report_csv(std::ostream& out, const std::array<BoundReport, 5>& reports);
void write_report_text(std::ostream& out, const std::array<BoundReport, 5>& reports);

/// Cartesian sweep over cosine-pulse parameters.
struct SweepRequest {
  std::vector<double> e0;
  std::vector<double> omega;
  std::vector<double> tau;
  HydrogenState state{1, 0, 0};
  BoundOptions options;
};

struct SweepRow {
  double e0 = 0.0, omega = 0.0, tau = 0.0;
  double b = 0.0, c = 0.0;
  std::array<BoundReport, 5> reports;
};

/// Rows ordered by (e0, omega, tau) in the order given. Refuses sweeps of
/// more than 10^7 rows.
std::vector<SweepRow> sweep_data(const SweepRequest& request);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Text summary of the fixed constants: the optimized resolvent bound and
/// its closed form, the first-term coefficients K(n, l) for n <= 10, and the
/// ground-state shift-norm check over a grid of displacements.
void write_constants_report(std::ostream& out);

}  // namespace ionbounds
