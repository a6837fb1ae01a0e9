#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lflow/asymptotics.hpp"
#include "lflow/problem.hpp"

namespace lflow {

/// Scalar diagnostics of one snapshot. u_t is always rhs(state).
///
/// Node-valued integrals use the trapezoid weights of the grid;
/// interface-valued ones use h per interior face.
struct DiagnosticsRecord {
  double t = 0.0;
  double grad_sup = 0.0;       // max |slope| over all faces
  double ut_min = 0.0;
  double ut_max = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
  double energy_ut = 0.0;      // sum w u_t^2
  double energy_vtx = 0.0;     // sum w (v_t)_x^2, (v_t)_x = d/dt u_t
  double speed_mean = 0.0;     // (sum w u_t) / (2d)
  double speed_dev = 0.0;      // max |u_t - A|
  double curvature_max = 0.0;  // max |u_xx| / (1 - u_x^2)^{3/2}
  double profile_dist = 0.0;   // distance to the translator modulo vertical shift

  // Carried for the checkers; not part of the CSV trace.
  double int_abs_uxt = 0.0;    // sum h |d/dt slope|
  double sup_vt_sq = 0.0;      // max over faces of (v'(slope) d/dt slope)^2
};

DiagnosticsRecord snapshot(const State& state, const ProblemSpec& spec,
                           const TranslatorProfile* translator = nullptr);

struct CheckReport {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<std::size_t> first_failure;  // index into the trace
};

/// O(h^2) slack for the invariant checkers: 1e-6 at h = 0.01, scaled by (h/0.01)^2.
double default_scheme_tol(const Grid& grid);

/// inf u_t(., 0) - tol <= u_t <= sup u_t(., 0) + tol on every record.
CheckReport check_ut_bracket(std::span<const DiagnosticsRecord> trace, double scheme_tol);

/// energy_ut non-increasing within 1e-10 (1 + energy_ut(0)). Needs >= 2 records.
CheckReport check_energy_monotone(std::span<const DiagnosticsRecord> trace);

/// A - int|u_xt| - tol <= u_t <= A + int|u_xt| + tol.
CheckReport check_ut_sandwich(const DiagnosticsRecord& record, double speed, double scheme_tol);
CheckReport check_ut_sandwich(std::span<const DiagnosticsRecord> trace, double speed,
                              double scheme_tol);

/// sup (v_t)^2 <= 2d int (v_tx)^2 + tol.
CheckReport check_sup_integral(const DiagnosticsRecord& record, double d, double scheme_tol);
CheckReport check_sup_integral(std::span<const DiagnosticsRecord> trace, double d,
                               double scheme_tol);

/// grad_sup < 1 everywhere and non-increasing within tol.
CheckReport check_gradient_bound(std::span<const DiagnosticsRecord> trace, double tol = 1e-12);

/// |speed_mean - A| <= 10 eps max(1, |A|) on every record.
CheckReport check_flux_identity(std::span<const DiagnosticsRecord> trace, double speed);

/// inf u(., 0) - tol <= u <= sup u(., 0) + tol. Meaningful only when A = 0.
CheckReport check_c0_bound(std::span<const DiagnosticsRecord> trace, double tol);

/// max|u_t - A| < eps (strict).
bool detect_translation(const DiagnosticsRecord& record, double speed, double eps);

struct DecayFit {
  double rate = 0.0;       // minus the slope of ln(energy_vtx) against t
  double r_squared = 0.0;
  double decades = 0.0;    // log10(max/min energy_vtx) over the fitted tail
  std::size_t points = 0;
};

/// Least-squares fit of ln(energy_vtx) over the last tail_fraction of the
/// trace. Throws InsufficientData with fewer than 5 tail records or when an
/// energy is at or below 1e-300. A constant tail yields rate 0 and r^2 = 0.
DecayFit fit_decay(std::span<const DiagnosticsRecord> trace, double tail_fraction);

}  // namespace lflow
