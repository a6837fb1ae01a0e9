#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lflow {

/// Slopes are only evaluated for |s| <= 1 - margin.
inline constexpr double kDefaultDomainMargin = 1e-9;

enum class FluxKind { MCF, Heat, Custom };

const char* to_string(FluxKind kind);

/// The nonlinearity v of u_t = (v(u_x))_x, defined on (-1, 1) with v' > 0.
///
/// MCF is v(s) = artanh(s), the spacelike curve shortening flow in the
/// Lorentz-Minkowski plane. Heat is v(s) = s. Custom wraps caller-supplied
/// evaluators for v, v' and v''. Instances are immutable and cheap to copy.
class FluxFunction {
 public:
  using Evaluator = std::function<double(double)>;

  static FluxFunction mcf(double margin = kDefaultDomainMargin);
  static FluxFunction heat(double margin = kDefaultDomainMargin);
  static FluxFunction custom(std::string name, Evaluator v, Evaluator dv, Evaluator d2v,
                             double margin = kDefaultDomainMargin);

  /// Named custom parameterizations usable from configuration files.
  ///   "cubic": v(s) = s + p s^3 / 3,  v'(s) = 1 + p s^2  (requires p > -1)
  static FluxFunction named_custom(const std::string& name, double param,
                                   double margin = kDefaultDomainMargin);

  FluxKind kind() const noexcept { return kind_; }
  double margin() const noexcept { return margin_; }
  /// Largest admissible |s|.
  double max_slope() const noexcept { return 1.0 - margin_; }
  const std::string& name() const noexcept { return name_; }

  bool admissible(double s) const noexcept { return s >= -max_slope() && s <= max_slope(); }

  /// v(s); throws DomainViolation when |s| > 1 - margin.
  double value(double s) const;
  double derivative(double s) const;
  double second_derivative(double s) const;

  /// s with v(s) = y. Closed forms for MCF and Heat, guarded bisection
  /// otherwise. Throws RangeViolation when y is not attained on the domain.
  double inverse(double y) const;

  // Unchecked evaluation for the solver's inner loops; callers guarantee
  // admissibility.
  double value_unchecked(double s) const;
  double derivative_unchecked(double s) const;

 private:
  struct CustomEvaluators {
    Evaluator v, dv, d2v;
  };

  FluxFunction(FluxKind kind, std::string name, double margin,
               std::shared_ptr<const CustomEvaluators> custom);

  void require_admissible(double s) const;

  FluxKind kind_;
  std::string name_;
  double margin_;
  std::shared_ptr<const CustomEvaluators> custom_;
};

struct FluxSampleFailure {
  std::size_t index;
  double slope;
  double derivative;
  bool non_monotone;  // v(s_i) <= v(s_{i-1})
};

struct FluxValidationReport {
  bool pass = true;
  std::size_t samples = 0;
  std::vector<FluxSampleFailure> failures;
};

/// Sweeps an even grid of [-1 + margin, 1 - margin] checking v' > 0 and
/// strict monotonicity of v between consecutive samples. Requires samples >= 3.
FluxValidationReport validate_flux(const FluxFunction& flux, std::size_t samples);

}  // namespace lflow
