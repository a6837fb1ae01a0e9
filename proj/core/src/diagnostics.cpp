#include "lflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lflow/errors.hpp"
#include "lflow/numerics.hpp"
#include "stepper.hpp"

namespace lflow {

DiagnosticsRecord snapshot(const State& state, const ProblemSpec& spec,
                           const TranslatorProfile* translator) {
  const Grid grid = spec.grid();
  const std::size_t n = grid.nodes();
  const double h = grid.spacing();
  detail::Stepper stepper(spec);

  std::vector<double> slope(n + 1);
  std::vector<double> ut(n);
  stepper.slopes(state.u, slope);
  stepper.rhs(state.u, ut);
  const double speed = translation_speed(spec.theta_left, spec.theta_right, spec.d, spec.flux);

  DiagnosticsRecord r;
  r.t = state.t;
  for (double s : slope) {
    r.grad_sup = std::max(r.grad_sup, std::abs(s));
  }
  const auto [umin, umax] = std::minmax_element(state.u.begin(), state.u.end());
  r.u_min = *umin;
  r.u_max = *umax;
  const auto [utmin, utmax] = std::minmax_element(ut.begin(), ut.end());
  r.ut_min = *utmin;
  r.ut_max = *utmax;

  KahanSum mass;
  KahanSum energy;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = grid.weight(i);
    mass.add(w * ut[i]);
    energy.add(w * ut[i] * ut[i]);
    r.speed_dev = std::max(r.speed_dev, std::abs(ut[i] - speed));
  }
  r.speed_mean = mass.value() / (2.0 * spec.d);
  r.energy_ut = energy.value();

  // v_t = v'(u_x) u_xt on faces; boundary faces have fixed slope, so v_t = 0 there.
  std::vector<double> vt(n + 1, 0.0);
  KahanSum abs_uxt;
  for (std::size_t k = 1; k < n; ++k) {
    const double slope_rate = (ut[k] - ut[k - 1]) / h;
    vt[k] = spec.flux.derivative(slope[k]) * slope_rate;
    abs_uxt.add(h * std::abs(slope_rate));
    r.sup_vt_sq = std::max(r.sup_vt_sq, vt[k] * vt[k]);
  }
  r.int_abs_uxt = abs_uxt.value();

  KahanSum energy_vtx;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = grid.weight(i);
    const double vtx = (vt[i + 1] - vt[i]) / w;
    energy_vtx.add(w * vtx * vtx);

    const double ux = i == 0 ? spec.theta_left
                      : i + 1 == n ? spec.theta_right
                                   : 0.5 * (slope[i] + slope[i + 1]);
    const double uxx = (slope[i + 1] - slope[i]) / w;
    const double k = uxx / std::pow(1.0 - ux * ux, 1.5);
    r.curvature_max = std::max(r.curvature_max, std::abs(k));
  }
  r.energy_vtx = energy_vtx.value();

  if (translator != nullptr) {
    r.profile_dist = profile_distance(state, *translator);
  }
  return r;
}

double default_scheme_tol(const Grid& grid) {
  const double ratio = grid.spacing() / 0.01;
  return 1e-6 * ratio * ratio;
}

namespace {

CheckReport make_report(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

void flag(CheckReport& report, std::size_t index, const std::string& detail) {
  if (report.pass) {
    report.pass = false;
    report.first_failure = index;
    report.detail = detail;
  }
}

std::string describe(std::size_t index, double t, const std::string& what) {
  std::ostringstream os;
  os.precision(10);
  os << "snapshot " << index << " (t = " << t << "): " << what;
  return os.str();
}

}  // namespace

CheckReport check_ut_bracket(std::span<const DiagnosticsRecord> trace, double scheme_tol) {
  CheckReport report = make_report("ut_bracket");
  if (trace.empty()) {
    flag(report, 0, "empty trace");
    return report;
  }
  const double lo = trace.front().ut_min - scheme_tol;
  const double hi = trace.front().ut_max + scheme_tol;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const DiagnosticsRecord& r = trace[i];
    if (!(r.ut_min >= lo) || !(r.ut_max <= hi)) {
      std::ostringstream os;
      os.precision(12);
      os << "u_t range [" << r.ut_min << ", " << r.ut_max << "] leaves the initial bracket ["
         << trace.front().ut_min << ", " << trace.front().ut_max << "]";
      flag(report, i, describe(i, r.t, os.str()));
    }
  }
  return report;
}

CheckReport check_energy_monotone(std::span<const DiagnosticsRecord> trace) {
  CheckReport report = make_report("energy_monotone");
  if (trace.size() < 2) {
    flag(report, 0, "need at least 2 snapshots");
    return report;
  }
  const double tol = 1e-10 * (1.0 + trace.front().energy_ut);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (!(trace[i].energy_ut <= trace[i - 1].energy_ut + tol)) {
      std::ostringstream os;
      os.precision(17);
      os << "energy_ut rose from " << trace[i - 1].energy_ut << " to " << trace[i].energy_ut;
      flag(report, i, describe(i, trace[i].t, os.str()));
    }
  }
  return report;
}

CheckReport check_ut_sandwich(const DiagnosticsRecord& record, double speed,
                              double scheme_tol) {
  CheckReport report = make_report("ut_sandwich");
  const double spread = record.int_abs_uxt + scheme_tol;
  if (!(record.ut_min >= speed - spread) || !(record.ut_max <= speed + spread)) {
    std::ostringstream os;
    os.precision(12);
    os << "u_t range [" << record.ut_min << ", " << record.ut_max << "] exceeds A ± int|u_xt| = "
       << speed << " ± " << record.int_abs_uxt;
    flag(report, 0, describe(0, record.t, os.str()));
  }
  return report;
}

CheckReport check_ut_sandwich(std::span<const DiagnosticsRecord> trace, double speed,
                              double scheme_tol) {
  CheckReport report = make_report("ut_sandwich");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CheckReport one = check_ut_sandwich(trace[i], speed, scheme_tol);
    if (!one.pass) {
      flag(report, i, describe(i, trace[i].t, one.detail));
    }
  }
  return report;
}

CheckReport check_sup_integral(const DiagnosticsRecord& record, double d, double scheme_tol) {
  CheckReport report = make_report("sup_integral");
  const double rhs = 2.0 * d * record.energy_vtx + scheme_tol;
  if (!(record.sup_vt_sq <= rhs)) {
    std::ostringstream os;
    os.precision(12);
    os << "sup(v_t)^2 = " << record.sup_vt_sq << " exceeds 2d int(v_tx)^2 = "
       << 2.0 * d * record.energy_vtx;
    flag(report, 0, describe(0, record.t, os.str()));
  }
  return report;
}

CheckReport check_sup_integral(std::span<const DiagnosticsRecord> trace, double d,
                               double scheme_tol) {
  CheckReport report = make_report("sup_integral");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CheckReport one = check_sup_integral(trace[i], d, scheme_tol);
    if (!one.pass) {
      flag(report, i, describe(i, trace[i].t, one.detail));
    }
  }
  return report;
}

CheckReport check_gradient_bound(std::span<const DiagnosticsRecord> trace, double tol) {
  CheckReport report = make_report("gradient_bound");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const DiagnosticsRecord& r = trace[i];
    if (!(r.grad_sup < 1.0)) {
      flag(report, i, describe(i, r.t, "grad_sup reached the light cone"));
    } else if (i > 0 && !(r.grad_sup <= trace[i - 1].grad_sup + tol)) {
      std::ostringstream os;
      os.precision(17);
      os << "grad_sup rose from " << trace[i - 1].grad_sup << " to " << r.grad_sup;
      flag(report, i, describe(i, r.t, os.str()));
    }
  }
  return report;
}

CheckReport check_flux_identity(std::span<const DiagnosticsRecord> trace, double speed) {
  CheckReport report = make_report("flux_identity");
  const double tol = 10.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(speed));
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double err = std::abs(trace[i].speed_mean - speed);
    if (!(err <= tol)) {
      std::ostringstream os;
      os.precision(17);
      os << "|speed_mean - A| = " << err << " > " << tol;
      flag(report, i, describe(i, trace[i].t, os.str()));
    }
  }
  return report;
}

CheckReport check_c0_bound(std::span<const DiagnosticsRecord> trace, double tol) {
  CheckReport report = make_report("c0_bound");
  if (trace.empty()) {
    flag(report, 0, "empty trace");
    return report;
  }
  const double lo = trace.front().u_min - tol;
  const double hi = trace.front().u_max + tol;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const DiagnosticsRecord& r = trace[i];
    if (!(r.u_min >= lo) || !(r.u_max <= hi)) {
      std::ostringstream os;
      os.precision(12);
      os << "u range [" << r.u_min << ", " << r.u_max << "] leaves [" << trace.front().u_min
         << ", " << trace.front().u_max << "]";
      flag(report, i, describe(i, r.t, os.str()));
    }
  }
  return report;
}

bool detect_translation(const DiagnosticsRecord& record, double speed, double eps) {
  // max_i |u_t,i - A| is attained at one of the extrema of u_t.
  const double dev = std::max(std::abs(record.ut_max - speed), std::abs(record.ut_min - speed));
  return dev < eps;
}

DecayFit fit_decay(std::span<const DiagnosticsRecord> trace, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw InsufficientData("tail_fraction must lie in (0, 1]");
  }
  const std::size_t count =
      static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(trace.size())));
  if (count < 5) {
    throw InsufficientData("decay fit needs at least 5 tail snapshots, got " +
                           std::to_string(count));
  }
  const auto tail = trace.last(count);
  double emin = std::numeric_limits<double>::infinity();
  double emax = 0.0;
  for (const DiagnosticsRecord& r : tail) {
    if (!(r.energy_vtx > 1e-300)) {
      throw InsufficientData("energy_vtx at t = " + std::to_string(r.t) + " has underflowed");
    }
    emin = std::min(emin, r.energy_vtx);
    emax = std::max(emax, r.energy_vtx);
  }

  const double m = static_cast<double>(count);
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (const DiagnosticsRecord& r : tail) {
    mean_t += r.t;
    mean_y += std::log(r.energy_vtx);
  }
  mean_t /= m;
  mean_y /= m;
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (const DiagnosticsRecord& r : tail) {
    const double dt = r.t - mean_t;
    const double dy = std::log(r.energy_vtx) - mean_y;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (stt == 0.0) {
    throw InsufficientData("decay fit needs distinct snapshot times");
  }

  DecayFit fit;
  fit.points = count;
  fit.decades = std::log10(emax / emin);
  if (syy == 0.0) {
    return fit;
  }
  const double slope = sty / stt;
  fit.rate = -slope;
  double ss_res = 0.0;
  for (const DiagnosticsRecord& r : tail) {
    const double pred = mean_y + slope * (r.t - mean_t);
    const double e = std::log(r.energy_vtx) - pred;
    ss_res += e * e;
  }
  fit.r_squared = 1.0 - ss_res / syy;
  return fit;
}

}  // namespace lflow
