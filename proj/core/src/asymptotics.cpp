#include "lflow/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lflow/errors.hpp"
#include "lflow/numerics.hpp"

namespace lflow {

double translation_speed(double theta_left, double theta_right, double d,
                         const FluxFunction& flux) {
  if (!(d > 0.0)) {
    throw ValidationError("half-width d must be positive");
  }
  return (flux.value(theta_right) - flux.value(theta_left)) / (2.0 * d);
}

const char* to_string(TranslatorKind kind) {
  switch (kind) {
    case TranslatorKind::Line:
      return "line";
    case TranslatorKind::GrimReaper:
      return "grim-reaper";
    case TranslatorKind::Parabola:
      return "parabola";
    case TranslatorKind::Generic:
      return "generic";
  }
  return "unknown";
}

namespace {

TranslatorProfile make_header(const ProblemSpec& spec) {
  TranslatorProfile p;
  const double vl = spec.flux.value(spec.theta_left);
  const double vr = spec.flux.value(spec.theta_right);
  p.speed = (vr - vl) / (2.0 * spec.d);
  p.c = 0.5 * (vl + vr);
  return p;
}

}  // namespace

void normalize_mean_zero(std::span<double> values, const Grid& grid) {
  KahanSum sum;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum.add(grid.weight(i) * values[i]);
  }
  const double mean = sum.value() / (2.0 * grid.half_width());
  for (double& v : values) {
    v -= mean;
  }
}

double translator_closed_form(const TranslatorProfile& profile, const FluxFunction& flux,
                              double x) {
  switch (profile.kind) {
    case TranslatorKind::Line:
      return flux.inverse(profile.c) * x;
    case TranslatorKind::GrimReaper: {
      const double a = profile.speed;
      return std::log(std::cosh(a * x + profile.c)) / a;
    }
    case TranslatorKind::Parabola:
      return 0.5 * profile.speed * x * x + profile.c * x;
    case TranslatorKind::Generic:
      break;
  }
  throw std::invalid_argument("generic translators have no closed form");
}

TranslatorProfile build_translator(const ProblemSpec& spec) {
  TranslatorProfile p = make_header(spec);
  if (p.speed == 0.0) {
    p.kind = TranslatorKind::Line;
  } else if (spec.flux.kind() == FluxKind::MCF) {
    p.kind = TranslatorKind::GrimReaper;
  } else if (spec.flux.kind() == FluxKind::Heat) {
    p.kind = TranslatorKind::Parabola;
  } else {
    return build_translator_by_quadrature(spec);
  }
  const Grid grid = spec.grid();
  p.samples.resize(grid.nodes());
  for (std::size_t i = 0; i < grid.nodes(); ++i) {
    p.samples[i] = translator_closed_form(p, spec.flux, grid.x(i));
  }
  normalize_mean_zero(p.samples, grid);
  return p;
}

TranslatorProfile build_translator_by_quadrature(const ProblemSpec& spec) {
  TranslatorProfile p = make_header(spec);
  const Grid grid = spec.grid();
  const std::size_t n = grid.nodes();
  p.kind = p.speed == 0.0 ? TranslatorKind::Line : TranslatorKind::Generic;

  // phi' = v^{-1}(A x + c) and phi'' = A / v'(phi'). Each panel uses the
  // trapezoid rule with its endpoint-derivative correction, O(h^4) overall.
  std::vector<double> slope(n);
  std::vector<double> curv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = (i == 0)       ? spec.theta_left
                     : (i + 1 == n) ? spec.theta_right
                                    : spec.flux.inverse(p.speed * grid.x(i) + p.c);
    slope[i] = s;
    curv[i] = p.speed / spec.flux.derivative(s);
  }
  const double h = grid.spacing();
  p.samples.assign(n, 0.0);
  KahanSum acc;
  for (std::size_t i = 1; i < n; ++i) {
    acc.add(0.5 * h * (slope[i - 1] + slope[i]) - h * h / 12.0 * (curv[i] - curv[i - 1]));
    p.samples[i] = acc.value();
  }
  normalize_mean_zero(p.samples, grid);
  return p;
}

double profile_distance(std::span<const double> u, const TranslatorProfile& profile) {
  if (u.size() != profile.samples.size()) {
    throw GridMismatch("state has " + std::to_string(u.size()) + " nodes, translator has " +
                       std::to_string(profile.samples.size()));
  }
  if (u.empty()) {
    return 0.0;
  }
  double lo = u[0] - profile.samples[0];
  double hi = lo;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double w = u[i] - profile.samples[i];
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return 0.5 * (hi - lo);
}

double profile_distance(const State& state, const TranslatorProfile& profile) {
  return profile_distance(std::span<const double>(state.u), profile);
}

}  // namespace lflow
