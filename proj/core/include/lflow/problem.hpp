#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lflow/flux.hpp"

namespace lflow {

/// Uniform node grid on [-d, d]: x_i = -d + i h, h = 2d / (N - 1).
///
/// Node i owns the control volume [x_i - h/2, x_i + h/2] clipped to the
/// interval, so the two boundary nodes carry half cells. Interface i+1/2 sits
/// between nodes i and i+1; there are N - 1 interior interfaces plus the two
/// boundary faces at x = -d and x = d.
class Grid {
 public:
  Grid(double half_width, std::size_t nodes);

  double half_width() const noexcept { return d_; }
  std::size_t nodes() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double x(std::size_t i) const noexcept {
    return i + 1 == n_ ? d_ : -d_ + static_cast<double>(i) * h_;
  }
  /// Control-volume width of node i: h inside, h/2 at the ends (trapezoid weights).
  double weight(std::size_t i) const noexcept {
    return (i == 0 || i + 1 == n_) ? 0.5 * h_ : h_;
  }
  std::vector<double> coordinates() const;

 private:
  double d_;
  std::size_t n_;
  double h_;
};

enum class ProfileTag { Constant, Linear, CubicBlend, CosineBump, Translator, Table };

const char* to_string(ProfileTag tag);

/// Initial data u0.
///
///   constant     u = value
///   linear       u = slope x + value
///   cubic-blend  u = m x + k x^2 + amplitude (x^3/3 - d^2 x) + value, where
///                m = (theta_l + theta_r)/2 and k = (theta_r - theta_l)/(4d).
///                With amplitude 0 this is the minimal-degree polynomial whose
///                endpoint slopes equal the boundary data; the cubic term has
///                zero slope at both ends.
///   cosine-bump  cubic-blend with amplitude 0, plus amplitude (1 + cos(pi x/d))/2
///   translator   the translating profile of the problem, plus value
///   table        caller-provided node samples
struct InitialProfile {
  ProfileTag tag = ProfileTag::CubicBlend;
  double value = 0.0;
  double slope = 0.0;
  double amplitude = 0.0;
  std::vector<double> table;

  bool closed_form() const noexcept { return tag != ProfileTag::Table; }
};

enum class Scheme { Explicit, SemiImplicit };

const char* to_string(Scheme scheme);

/// Time-step selection: a fixed step, or the diffusive CFL bound
/// safety * h^2 / (2 max v'(sigma)) recomputed every step (explicit only).
struct TimeStepPolicy {
  bool adaptive = true;
  double fixed_dt = 0.0;
  double cfl_safety = 0.45;

  static TimeStepPolicy cfl(double safety = 0.45) { return {true, 0.0, safety}; }
  static TimeStepPolicy fixed(double dt) { return {false, dt, 0.45}; }
};

struct ProblemSpec {
  double d = 1.0;
  double theta_left = 0.0;
  double theta_right = 0.0;
  InitialProfile u0;
  FluxFunction flux = FluxFunction::mcf();
  std::size_t nodes = 201;
  Scheme scheme = Scheme::Explicit;
  TimeStepPolicy dt;
  double t_end = 30.0;
  double snapshot_every = 0.1;

  /// Early stop once max|u_t - A| < steady_eps on steady_snapshots consecutive snapshots.
  bool stop_when_steady = true;
  double steady_eps = 1e-5;
  int steady_snapshots = 3;
  /// Rejected steps are retried with half the step at most this many times.
  int retry_max = 30;
  /// Reject specs whose u0 fails check_compatibility.
  bool compat_strict = true;
  /// Overrides the default compatibility tolerance (1e-6 closed form, 2h^2 table).
  std::optional<double> compat_tol;

  Grid grid() const { return Grid(d, nodes); }
};

/// Node values of u at time t.
struct State {
  double t = 0.0;
  std::vector<double> u;
};

/// Samples u0 on the node grid.
std::vector<double> sample_initial(const ProblemSpec& spec);

/// Endpoint slopes of a closed-form u0, taken from its analytic derivative.
std::optional<std::pair<double, double>> analytic_endpoint_slopes(const ProblemSpec& spec);

}  // namespace lflow
