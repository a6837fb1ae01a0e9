#include "lflow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lflow/errors.hpp"
#include "lflow/numerics.hpp"
#include "stepper.hpp"

namespace lflow {
namespace detail {

Stepper::Stepper(const ProblemSpec& spec)
    : flux_(spec.flux),
      theta_l_(spec.theta_left),
      theta_r_(spec.theta_right),
      flux_l_(spec.flux.value(spec.theta_left)),
      flux_r_(spec.flux.value(spec.theta_right)),
      n_(spec.nodes),
      h_(0.0),
      inv_h_(0.0) {
  const Grid grid = spec.grid();
  h_ = grid.spacing();
  inv_h_ = 1.0 / h_;
  inv_w_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    inv_w_[i] = 1.0 / grid.weight(i);
  }
  face_.resize(n_ + 1);
  work_.resize(n_);
  lower_.resize(n_);
  diag_.resize(n_);
  upper_.resize(n_);
  scratch_.resize(n_);
}

void Stepper::slopes(std::span<const double> u, std::span<double> out) const {
  if (u.size() != n_) {
    throw GridMismatch("state has " + std::to_string(u.size()) + " nodes, expected " +
                       std::to_string(n_));
  }
  const double bound = flux_.max_slope();
  out[0] = theta_l_;
  out[n_] = theta_r_;
  for (std::size_t k = 1; k < n_; ++k) {
    const double s = (u[k] - u[k - 1]) * inv_h_;
    if (!(std::abs(s) <= bound)) {
      std::ostringstream msg;
      if (!std::isfinite(s)) {
        msg << "non-finite slope at interface " << k;
        throw NumericalFailure(msg.str());
      }
      msg << "slope " << s << " at interface " << k << " exceeds the spacelike bound " << bound;
      throw SpacelikeViolation(msg.str());
    }
    out[k] = s;
  }
}

double Stepper::max_abs_slope(std::span<const double> u) const {
  double m = std::max(std::abs(theta_l_), std::abs(theta_r_));
  for (std::size_t k = 1; k < n_; ++k) {
    const double s = std::abs((u[k] - u[k - 1]) * inv_h_);
    if (!std::isfinite(s)) {
      return std::nan("");
    }
    m = std::max(m, s);
  }
  return m;
}

void Stepper::check_result(std::span<const double> u) const {
  const double m = max_abs_slope(u);
  if (std::isnan(m)) {
    throw NumericalFailure("step produced non-finite values");
  }
  if (m > flux_.max_slope()) {
    std::ostringstream msg;
    msg << "step produced slope magnitude " << m << " beyond the spacelike bound "
        << flux_.max_slope();
    throw SpacelikeViolation(msg.str());
  }
}

void Stepper::rhs(std::span<const double> u, std::span<double> out) {
  slopes(u, face_);
  // Reuse face_ for the fluxes; the boundary fluxes are exact.
  face_[0] = flux_l_;
  face_[n_] = flux_r_;
  for (std::size_t k = 1; k < n_; ++k) {
    face_[k] = flux_.value_unchecked(face_[k]);
  }
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = (face_[i + 1] - face_[i]) * inv_w_[i];
  }
}

double Stepper::stable_dt(std::span<const double> u, double safety) {
  slopes(u, face_);
  double max_dv = 0.0;
  for (std::size_t k = 0; k <= n_; ++k) {
    max_dv = std::max(max_dv, flux_.derivative_unchecked(face_[k]));
  }
  return safety * h_ * h_ / (2.0 * max_dv);
}

void Stepper::explicit_step(std::span<const double> u, double dt, std::span<double> out) {
  rhs(u, work_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = u[i] + dt * work_[i];
  }
  check_result(out);
}

void Stepper::semi_implicit_step(std::span<const double> u, double dt, std::span<double> out) {
  rhs(u, work_);
  // face_ now holds fluxes; recompute slopes for the frozen coefficients.
  slopes(u, face_);
  // Row i of (I - dt L): couples neighbours through interior faces only.
  for (std::size_t i = 0; i < n_; ++i) {
    const double a_left = i > 0 ? flux_.derivative_unchecked(face_[i]) : 0.0;
    const double a_right = i + 1 < n_ ? flux_.derivative_unchecked(face_[i + 1]) : 0.0;
    const double scale = dt * inv_h_ * inv_w_[i];
    lower_[i] = -scale * a_left;
    upper_[i] = -scale * a_right;
    diag_[i] = 1.0 + scale * (a_left + a_right);
    work_[i] *= dt;
  }
  // Solve for the increment: (I - dt L)(u_new - u) = dt rhs(u), which is the
  // system (I - dt L) u_new = u + dt (rhs(u) - L u).
  solve_tridiagonal(lower_, diag_, upper_, work_, scratch_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = u[i] + work_[i];
  }
  check_result(out);
}

}  // namespace detail

std::vector<double> node_slopes(const State& state, const ProblemSpec& spec) {
  detail::Stepper stepper(spec);
  std::vector<double> out(spec.nodes + 1);
  stepper.slopes(state.u, out);
  return out;
}

std::vector<double> rhs(const State& state, const ProblemSpec& spec) {
  detail::Stepper stepper(spec);
  std::vector<double> out(spec.nodes);
  stepper.rhs(state.u, out);
  return out;
}

double stable_dt(const State& state, const ProblemSpec& spec, double safety) {
  detail::Stepper stepper(spec);
  return stepper.stable_dt(state.u, safety);
}

State step_explicit(const State& state, const ProblemSpec& spec, double dt) {
  if (!(dt > 0.0)) {
    throw ValidationError("time step must be positive");
  }
  detail::Stepper stepper(spec);
  State next{state.t + dt, std::vector<double>(spec.nodes)};
  stepper.explicit_step(state.u, dt, next.u);
  return next;
}

State step_semi_implicit(const State& state, const ProblemSpec& spec, double dt) {
  if (!(dt > 0.0)) {
    throw ValidationError("time step must be positive");
  }
  detail::Stepper stepper(spec);
  State next{state.t + dt, std::vector<double>(spec.nodes)};
  stepper.semi_implicit_step(state.u, dt, next.u);
  return next;
}

CompatibilityReport check_compatibility(const ProblemSpec& spec) {
  CompatibilityReport report;
  const Grid grid = spec.grid();
  double left = 0.0;
  double right = 0.0;
  if (auto analytic = analytic_endpoint_slopes(spec)) {
    report.analytic = true;
    left = analytic->first;
    right = analytic->second;
    report.tolerance = spec.compat_tol.value_or(1e-6);
  } else {
    const std::vector<double> u = sample_initial(spec);
    const std::size_t n = u.size();
    const double h = grid.spacing();
    left = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    right = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
    report.tolerance = spec.compat_tol.value_or(2.0 * h * h);
  }
  report.deviation_left = std::abs(left - spec.theta_left);
  report.deviation_right = std::abs(right - spec.theta_right);
  report.pass =
      report.deviation_left <= report.tolerance && report.deviation_right <= report.tolerance;
  return report;
}

void validate(const ProblemSpec& spec) {
  auto fail = [](const std::string& what) { throw ValidationError(what); };
  if (!(spec.d > 0.0) || !std::isfinite(spec.d)) fail("d must be a finite positive number");
  if (spec.nodes < 3) fail("nodes must be at least 3");
  const double bound = spec.flux.max_slope();
  if (!(std::abs(spec.theta_left) <= bound)) fail("theta_left must satisfy |θ| < 1");
  if (!(std::abs(spec.theta_right) <= bound)) fail("theta_right must satisfy |θ| < 1");
  if (!(spec.t_end >= 0.0) || !std::isfinite(spec.t_end)) fail("t_end must be >= 0");
  if (!(spec.snapshot_every > 0.0)) fail("snapshot_every must be positive");
  if (spec.dt.adaptive) {
    if (spec.scheme != Scheme::Explicit) {
      fail("CFL-adaptive time steps apply to the explicit scheme only; set a fixed dt");
    }
    if (!(spec.dt.cfl_safety > 0.0)) fail("cfl_safety must be positive");
  } else if (!(spec.dt.fixed_dt > 0.0) || !std::isfinite(spec.dt.fixed_dt)) {
    fail("dt must be positive");
  }
  if (spec.retry_max < 0) fail("retry_max must be >= 0");
  if (spec.steady_snapshots < 1) fail("steady_snapshots must be >= 1");
  if (!(spec.steady_eps >= 0.0)) fail("steady_eps must be >= 0");
  if (spec.compat_tol && !(*spec.compat_tol >= 0.0)) fail("compat_tol must be >= 0");

  const FluxValidationReport flux_report = validate_flux(spec.flux, 101);
  if (!flux_report.pass) {
    std::ostringstream msg;
    msg << "flux '" << spec.flux.name() << "' is not strictly increasing: v' <= 0 or v "
        << "non-monotone at " << flux_report.failures.size() << " of " << flux_report.samples
        << " samples (first at s = " << flux_report.failures.front().slope << ")";
    fail(msg.str());
  }

  State initial{0.0, sample_initial(spec)};
  for (double v : initial.u) {
    if (!std::isfinite(v)) fail("initial profile has non-finite values");
  }
  detail::Stepper stepper(spec);
  const double m = stepper.max_abs_slope(initial.u);
  if (!(m <= bound)) {
    std::ostringstream msg;
    msg << "initial profile is not spacelike: max |slope| = " << m;
    fail(msg.str());
  }
  if (spec.compat_strict) {
    const CompatibilityReport compat = check_compatibility(spec);
    if (!compat.pass) {
      std::ostringstream msg;
      msg << "initial profile violates the compatibility condition: endpoint slope deviations "
          << compat.deviation_left << " (left), " << compat.deviation_right
          << " (right), tolerance " << compat.tolerance;
      fail(msg.str());
    }
  }
}

}  // namespace lflow
