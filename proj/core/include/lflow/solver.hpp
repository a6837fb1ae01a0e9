#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lflow/problem.hpp"

namespace lflow {

/// Interface slopes: entry 0 is the left boundary face (theta_l), entries
/// 1..N-1 are (u_{i+1} - u_i)/h, entry N is the right face (theta_r).
/// Throws SpacelikeViolation if any |slope| > 1 - margin, NumericalFailure
/// on non-finite values.
std::vector<double> node_slopes(const State& state, const ProblemSpec& spec);

/// Conservative flux divergence u_t,i = (F_{i+1/2} - F_{i-1/2}) / w_i with
/// F = v(slope), boundary fluxes v(theta) and w_i the node control volume.
/// The weighted sum telescopes: sum_i w_i u_t,i = v(theta_r) - v(theta_l).
std::vector<double> rhs(const State& state, const ProblemSpec& spec);

/// safety * h^2 / (2 max v'(slope)) over all faces.
double stable_dt(const State& state, const ProblemSpec& spec, double safety);

/// Forward Euler: u + dt rhs(u). Throws SpacelikeViolation (or
/// NumericalFailure) if the result leaves the spacelike domain.
State step_explicit(const State& state, const ProblemSpec& spec, double dt);

/// Linearly implicit Euler with interface coefficients a = v'(slope) frozen
/// at the current state: (I - dt L) u_new = u + dt b, with L the weighted
/// second difference (zero flux through the boundary faces) and
/// b = rhs(u) - L u carrying the boundary fluxes v(theta). For the heat flux
/// b reduces to the boundary contributions alone.
State step_semi_implicit(const State& state, const ProblemSpec& spec, double dt);

struct CompatibilityReport {
  bool pass = false;
  double deviation_left = 0.0;
  double deviation_right = 0.0;
  double tolerance = 0.0;
  bool analytic = false;  // slopes from the closed form rather than from samples
};

/// Compares the endpoint slopes of u0 with theta_l and theta_r. Closed-form
/// profiles use their exact derivative (tolerance 1e-6); tables use the
/// one-sided second-order differences (-3u_0 + 4u_1 - u_2)/(2h) and mirror
/// (tolerance 2h^2).
CompatibilityReport check_compatibility(const ProblemSpec& spec);

/// Throws ValidationError describing the first violated requirement:
/// d > 0, N >= 3, |theta| <= 1 - margin, dt policy, flux validation,
/// spacelike initial data and (when compat_strict) compatibility.
void validate(const ProblemSpec& spec);

}  // namespace lflow
