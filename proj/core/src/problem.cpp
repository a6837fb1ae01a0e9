#include "lflow/problem.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lflow/asymptotics.hpp"
#include "lflow/errors.hpp"

namespace lflow {

Grid::Grid(double half_width, std::size_t nodes) : d_(half_width), n_(nodes), h_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ValidationError("d must be a finite positive number");
  }
  if (nodes < 3) {
    throw ValidationError("nodes must be at least 3");
  }
  h_ = 2.0 * d_ / static_cast<double>(n_ - 1);
}

std::vector<double> Grid::coordinates() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    xs[i] = x(i);
  }
  return xs;
}

const char* to_string(ProfileTag tag) {
  switch (tag) {
    case ProfileTag::Constant:
      return "constant";
    case ProfileTag::Linear:
      return "linear";
    case ProfileTag::CubicBlend:
      return "cubic-blend";
    case ProfileTag::CosineBump:
      return "cosine-bump";
    case ProfileTag::Translator:
      return "translator";
    case ProfileTag::Table:
      return "table";
  }
  return "unknown";
}

const char* to_string(Scheme scheme) {
  return scheme == Scheme::Explicit ? "explicit" : "semi-implicit";
}

namespace {

double blend_value(const ProblemSpec& spec, double amplitude, double x) {
  const double m = 0.5 * (spec.theta_left + spec.theta_right);
  const double k = (spec.theta_right - spec.theta_left) / (4.0 * spec.d);
  return m * x + k * x * x + amplitude * (x * x * x / 3.0 - spec.d * spec.d * x);
}

double blend_slope(const ProblemSpec& spec, double amplitude, double x) {
  const double m = 0.5 * (spec.theta_left + spec.theta_right);
  const double k = (spec.theta_right - spec.theta_left) / (4.0 * spec.d);
  return m + 2.0 * k * x + amplitude * (x * x - spec.d * spec.d);
}

}  // namespace

std::vector<double> sample_initial(const ProblemSpec& spec) {
  const Grid grid = spec.grid();
  const InitialProfile& p = spec.u0;
  const std::size_t n = grid.nodes();
  std::vector<double> u(n);
  switch (p.tag) {
    case ProfileTag::Constant:
      u.assign(n, p.value);
      break;
    case ProfileTag::Linear:
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = p.slope * grid.x(i) + p.value;
      }
      break;
    case ProfileTag::CubicBlend:
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = blend_value(spec, p.amplitude, grid.x(i)) + p.value;
      }
      break;
    case ProfileTag::CosineBump:
      for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        u[i] = blend_value(spec, 0.0, x) +
               0.5 * p.amplitude * (1.0 + std::cos(std::numbers::pi * x / spec.d)) + p.value;
      }
      break;
    case ProfileTag::Translator: {
      u = build_translator(spec).samples;
      for (double& v : u) {
        v += p.value;
      }
      break;
    }
    case ProfileTag::Table:
      if (p.table.size() != n) {
        throw ValidationError("u0 table has " + std::to_string(p.table.size()) +
                              " samples but the grid has " + std::to_string(n) + " nodes");
      }
      u = p.table;
      break;
  }
  return u;
}

std::optional<std::pair<double, double>> analytic_endpoint_slopes(const ProblemSpec& spec) {
  const InitialProfile& p = spec.u0;
  switch (p.tag) {
    case ProfileTag::Constant:
      return std::pair{0.0, 0.0};
    case ProfileTag::Linear:
      return std::pair{p.slope, p.slope};
    case ProfileTag::CubicBlend:
      return std::pair{blend_slope(spec, p.amplitude, -spec.d),
                       blend_slope(spec, p.amplitude, spec.d)};
    case ProfileTag::CosineBump:
      // The bump's derivative, -A pi/(2d) sin(pi x/d), vanishes at both ends.
      return std::pair{blend_slope(spec, 0.0, -spec.d), blend_slope(spec, 0.0, spec.d)};
    case ProfileTag::Translator: {
      const TranslatorProfile t = build_translator(spec);
      return std::pair{spec.flux.inverse(-t.speed * spec.d + t.c),
                       spec.flux.inverse(t.speed * spec.d + t.c)};
    }
    case ProfileTag::Table:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace lflow
