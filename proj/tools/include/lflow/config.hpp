#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lflow/problem.hpp"

namespace lflow::cli {

/// Which checkers `verify` evaluates.
struct CheckToggles {
  bool ut_bracket = true;
  bool energy_monotone = true;
  bool ut_sandwich = true;
  bool sup_integral = true;
  bool gradient_bound = true;
  bool flux_identity = true;
  bool decay = true;
  bool c0_bound = true;  // evaluated only when A = 0
};

struct SweepAxes {
  std::vector<double> theta_left;
  std::vector<double> theta_right;
  std::vector<double> d;
  /// theta_left = -theta_right for every sweep point.
  bool symmetric = false;

  bool empty() const noexcept { return theta_left.empty() && theta_right.empty() && d.empty(); }
};

struct RunConfig {
  ProblemSpec spec;
  std::string flux_name = "mcf";
  std::string custom_flux;
  double custom_param = 1.0;

  std::string trace_file = "trace.csv";
  std::string profile_file = "profile.csv";
  std::string translator_file = "translator.csv";
  std::string summary_file = "summary.csv";
  std::string plot_file = "plot.svg";
  bool plot = false;

  CheckToggles checks;
  double scheme_tol = 0.0;  // 0 selects default_scheme_tol(grid)
  double decay_tail = 0.5;

  SweepAxes sweep;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

/// Parses and validates a flat JSON configuration document. Unknown keys are
/// rejected. Throws ParseError (with line/column for syntax errors, field
/// name for type errors) or ValidationError naming the violated bound.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; I/O failures surface as ParseError.
RunConfig load_config(const std::string& path);

/// Rebuilds spec.flux from the flux fields (used after changing the margin).
FluxFunction make_flux(const std::string& name, const std::string& custom, double param,
                       double margin);

}  // namespace lflow::cli
