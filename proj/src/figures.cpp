#include "ionbounds/figures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ionbounds/csv.hpp"
#include "ionbounds/kato.hpp"

namespace ionbounds {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

BoundCurvePoint curve_point(const Pulse& pulse, const StateData& state,
                            const BoundOptions& options) {
  BoundCurvePoint point;
  const auto upper = upper_bound_2(pulse, state, options);
  point.upper_raw = *upper.raw;
  point.upper_clipped = *upper.clipped;
  const auto lower = lower_bound(pulse, state, options);
  point.lower_valid = lower.valid;
  point.lower_raw = lower.valid ? *lower.raw : kNan;
  point.lower_clipped = lower.valid ? *lower.clipped : kNan;
  return point;
}

void write_optional(std::ostream& out, const BoundReport& report) {
  out << ',' << (report.valid ? '1' : '0');
  out << ',' << format_full_precision(report.raw ? *report.raw : kNan);
  out << ',' << format_full_precision(report.clipped ? *report.clipped : kNan);
}

}  // namespace

std::vector<Figure1Row> figure1_data(int n_points) {
  if (n_points < 2) throw std::invalid_argument("figure1: need at least 2 points");
  const double tau_max = 2.0 * std::numbers::pi / kFigure1Omega;
  const StateData state = hydrogen_state_data(HydrogenState(1, 0, 0));
  BoundOptions options;
  options.drop_spreading = true;
  options.shift_mode = ShiftMode::estimate;

  std::vector<Figure1Row> rows;
  rows.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    Figure1Row row;
    row.tau = tau_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    for (std::size_t k = 0; k < kFigure1FieldStrengths.size(); ++k) {
      const Pulse pulse = Pulse::cosine(kFigure1FieldStrengths[k], kFigure1Omega, row.tau);
      row.per_field[k] = curve_point(pulse, state, options);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows) {
  out << "tau";
  for (double e0 : kFigure1FieldStrengths) {
    const int label = static_cast<int>(e0);
    out << ",upper_E0_" << label << "_raw,upper_E0_" << label << "_clipped"
        << ",lower_E0_" << label << "_raw,lower_E0_" << label << "_clipped"
        << ",lower_E0_" << label << "_valid";
  }
  out << '\n';
  for (const auto& row : rows) {
    out << format_full_precision(row.tau);
    for (const auto& point : row.per_field) {
      out << ',' << format_full_precision(point.upper_raw) << ','
          << format_full_precision(point.upper_clipped) << ','
          << format_full_precision(point.lower_raw) << ','
          << format_full_precision(point.lower_clipped) << ','
          << (point.lower_valid ? '1' : '0');
    }
    out << '\n';
  }
}

std::vector<Figure2Row> figure2_data(int n_points, bool include_spreading) {
  if (n_points < 2) throw std::invalid_argument("figure2: need at least 2 points");
  const double tau_max = 4.0 * 2.0 * std::numbers::pi / kFigure2Omega;
  const StateData state = hydrogen_state_data(HydrogenState(1, 0, 0));
  BoundOptions options;
  options.drop_spreading = !include_spreading;
  options.shift_mode = ShiftMode::estimate;

  std::vector<Figure2Row> rows;
  rows.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    Figure2Row row;
    row.tau = tau_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    const Pulse pulse = Pulse::cosine(kFigure2FieldStrength, kFigure2Omega, row.tau);
    const auto upper = upper_bound_2(pulse, state, options);
    row.upper_raw = *upper.raw;
    row.upper_clipped = *upper.clipped;
    rows.push_back(row);
  }
  return rows;
}

void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows) {
  out << "tau,upper_raw,upper_clipped\n";
  for (const auto& row : rows) {
    out << format_full_precision(row.tau) << ',' << format_full_precision(row.upper_raw)
        << ',' << format_full_precision(row.upper_clipped) << '\n';
  }
}

std::array<BoundReport, 5> evaluate_all_bounds(const Pulse& pulse,
                                               const StateData& state,
                                               const BoundOptions& options) {
  return {upper_bound_1(pulse, state, options), upper_bound_2(pulse, state, options),
          lower_bound(pulse, state, options), pfeifer_bound(pulse, state, options),
          first_order_pert_bound(pulse, state, options)};
}

void write_report_csv(std::ostream& out, const std::array<BoundReport, 5>& reports) {
  out << "bound,valid,reason,raw,clipped,term1_name,term1_value,term2_name,"
         "term2_value,term3_name,term3_value\n";
  for (const auto& report : reports) {
    out << bound_kind_name(report.kind) << ',' << (report.valid ? '1' : '0') << ','
        << report.validity_reason << ','
        << format_full_precision(report.raw ? *report.raw : kNan) << ','
        << format_full_precision(report.clipped ? *report.clipped : kNan);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i < report.terms.size())
        out << ',' << report.terms[i].name << ','
            << format_full_precision(report.terms[i].value);
      else
        out << ",,";
    }
    out << '\n';
  }
}

void write_report_text(std::ostream& out, const std::array<BoundReport, 5>& reports) {
  for (const auto& report : reports) {
    out << bound_kind_name(report.kind) << ": ";
    if (!report.valid) {
      out << "not valid (" << report.validity_reason << ")\n";
      continue;
    }
    out << "raw " << format_full_precision(*report.raw) << ", clipped "
        << format_full_precision(*report.clipped);
    out << " [";
    for (std::size_t i = 0; i < report.terms.size(); ++i) {
      if (i) out << ", ";
      out << report.terms[i].name << " = " << format_full_precision(report.terms[i].value);
    }
    out << "]\n";
  }
}

std::vector<SweepRow> sweep_data(const SweepRequest& request) {
  const std::size_t total =
      request.e0.size() * request.omega.size() * request.tau.size();
  if (total > 10'000'000)
    throw std::invalid_argument("sweep larger than 10^7 rows refused");
  const StateData state = hydrogen_state_data(request.state);
  std::vector<SweepRow> rows;
  rows.reserve(total);
  for (double e0 : request.e0)
    for (double omega : request.omega)
      for (double tau : request.tau) {
        const Pulse pulse = Pulse::cosine(e0, omega, tau);
        SweepRow row;
        row.e0 = e0;
        row.omega = omega;
        row.tau = tau;
        row.b = pulse.momentum_transfer(tau);
        row.c = pulse.displacement(tau);
        row.reports = evaluate_all_bounds(pulse, state, request.options);
        rows.push_back(std::move(row));
      }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "E0,omega,tau,b_tau,c_tau";
  for (BoundKind kind : {BoundKind::upper1, BoundKind::upper2, BoundKind::lower,
                         BoundKind::pfeifer, BoundKind::pert1}) {
    const char* name = bound_kind_name(kind);
    out << ',' << name << "_valid," << name << "_raw," << name << "_clipped";
  }
  out << '\n';
  for (const auto& row : rows) {
    out << format_full_precision(row.e0) << ',' << format_full_precision(row.omega)
        << ',' << format_full_precision(row.tau) << ',' << format_full_precision(row.b)
        << ',' << format_full_precision(row.c);
    for (const auto& report : row.reports) write_optional(out, report);
    out << '\n';
  }
}

void write_constants_report(std::ostream& out) {
  const auto optimum = optimize_resolvent_bound();
  const double closed = resolvent_bound_closed_form();
  out << "Coulomb resolvent-norm bound ||(1/r)(-Laplacian+1)^{-1}||\n";
  out << "  numerical minimum : " << format_full_precision(optimum.value) << "  (rho = "
      << format_full_precision(optimum.params.rho)
      << ", R = " << format_full_precision(optimum.params.R) << ")\n";
  out << "  closed form       : " << format_full_precision(closed)
      << "  = 11 pi^(7/11) / (2^(6/11) 3^(9/11)), often quoted rounded down to 6.35\n";
  out << '\n';
  out << "First-term coefficients K(n, l) = C ||(2H0+1)psi|| + ||V psi|| (shift norm <= K)\n";
  for (int n = 1; n <= 10; ++n) {
    out << "  n = " << n << " :";
    for (int l = 0; l < n; ++l) {
      const double k = generic_first_term_coefficient(HydrogenState(n, l, 0));
      out << "  K(" << n << ',' << l << ") = " << format_full_precision(k);
    }
    out << '\n';
  }
  out << '\n';
  out << "Ground-state shift-norm estimate sqrt(N2(c) + 2) over displacements c\n";
  double worst = 0.0;
  for (double c : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    const double value = shift_difference_norm(c, ShiftNormMode::estimate).value;
    worst = std::max(worst, value);
    out << "  c = " << format_full_precision(c) << " : "
        << format_full_precision(value) << '\n';
  }
  out << "  max over grid = " << format_full_precision(worst) << " (<= 2)\n";
}

}  // namespace ionbounds
