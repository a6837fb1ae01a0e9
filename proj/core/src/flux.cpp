#include "lflow/flux.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "lflow/errors.hpp"

namespace lflow {

namespace {

constexpr double kBisectionTol = 1e-12;
constexpr int kBisectionMaxIter = 200;

}  // namespace

const char* to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::MCF:
      return "mcf";
    case FluxKind::Heat:
      return "heat";
    case FluxKind::Custom:
      return "custom";
  }
  return "unknown";
}

FluxFunction::FluxFunction(FluxKind kind, std::string name, double margin,
                           std::shared_ptr<const CustomEvaluators> custom)
    : kind_(kind), name_(std::move(name)), margin_(margin), custom_(std::move(custom)) {
  if (!(margin_ > 0.0 && margin_ < 1.0)) {
    throw ValidationError("flux domain margin must lie in (0, 1)");
  }
}

FluxFunction FluxFunction::mcf(double margin) {
  return FluxFunction(FluxKind::MCF, "mcf", margin, nullptr);
}

FluxFunction FluxFunction::heat(double margin) {
  return FluxFunction(FluxKind::Heat, "heat", margin, nullptr);
}

FluxFunction FluxFunction::custom(std::string name, Evaluator v, Evaluator dv, Evaluator d2v,
                                  double margin) {
  if (!v || !dv || !d2v) {
    throw ValidationError("custom flux '" + name + "' must supply v, v' and v''");
  }
  auto evaluators = std::make_shared<const CustomEvaluators>(
      CustomEvaluators{std::move(v), std::move(dv), std::move(d2v)});
  return FluxFunction(FluxKind::Custom, std::move(name), margin, std::move(evaluators));
}

FluxFunction FluxFunction::named_custom(const std::string& name, double param, double margin) {
  if (name == "cubic") {
    if (!(param > -1.0)) {
      throw ValidationError("custom flux 'cubic' requires custom_param > -1 so that v' > 0");
    }
    return custom(
        "cubic", [param](double s) { return s + param * s * s * s / 3.0; },
        [param](double s) { return 1.0 + param * s * s; },
        [param](double s) { return 2.0 * param * s; }, margin);
  }
  throw ValidationError("unknown custom flux '" + name + "' (known: cubic)");
}

void FluxFunction::require_admissible(double s) const {
  if (!admissible(s)) {
    std::ostringstream msg;
    msg << "slope " << s << " outside the spacelike domain |s| <= " << max_slope();
    throw DomainViolation(msg.str());
  }
}

double FluxFunction::value_unchecked(double s) const {
  switch (kind_) {
    case FluxKind::MCF:
      return std::atanh(s);
    case FluxKind::Heat:
      return s;
    case FluxKind::Custom:
      return custom_->v(s);
  }
  return s;
}

double FluxFunction::derivative_unchecked(double s) const {
  switch (kind_) {
    case FluxKind::MCF:
      return 1.0 / (1.0 - s * s);
    case FluxKind::Heat:
      return 1.0;
    case FluxKind::Custom:
      return custom_->dv(s);
  }
  return 1.0;
}

double FluxFunction::value(double s) const {
  require_admissible(s);
  return value_unchecked(s);
}

double FluxFunction::derivative(double s) const {
  require_admissible(s);
  return derivative_unchecked(s);
}

double FluxFunction::second_derivative(double s) const {
  require_admissible(s);
  switch (kind_) {
    case FluxKind::MCF: {
      const double q = 1.0 - s * s;
      return 2.0 * s / (q * q);
    }
    case FluxKind::Heat:
      return 0.0;
    case FluxKind::Custom:
      return custom_->d2v(s);
  }
  return 0.0;
}

double FluxFunction::inverse(double y) const {
  const double lo_s = -max_slope();
  const double hi_s = max_slope();
  const double lo_y = value_unchecked(lo_s);
  const double hi_y = value_unchecked(hi_s);
  if (!(y >= lo_y && y <= hi_y)) {
    std::ostringstream msg;
    msg << "flux value " << y << " outside the attainable range [" << lo_y << ", " << hi_y
        << "]";
    throw RangeViolation(msg.str());
  }
  switch (kind_) {
    case FluxKind::MCF:
      return std::tanh(y);
    case FluxKind::Heat:
      return y;
    case FluxKind::Custom:
      break;
  }
  double a = lo_s;
  double b = hi_s;
  for (int it = 0; it < kBisectionMaxIter && (b - a) > kBisectionTol; ++it) {
    const double mid = 0.5 * (a + b);
    if (custom_->v(mid) < y) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

FluxValidationReport validate_flux(const FluxFunction& flux, std::size_t samples) {
  if (samples < 3) {
    throw ValidationError("flux validation needs at least 3 samples");
  }
  FluxValidationReport report;
  report.samples = samples;
  const double lo = -flux.max_slope();
  const double hi = flux.max_slope();
  double prev_v = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double s =
        (i + 1 == samples) ? hi : lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    const double dv = flux.derivative(s);
    const double v = flux.value(s);
    const bool non_monotone = i > 0 && !(v > prev_v);
    if (!(dv > 0.0) || non_monotone) {
      report.failures.push_back({i, s, dv, non_monotone});
    }
    prev_v = v;
  }
  report.pass = report.failures.empty();
  return report;
}

}  // namespace lflow
