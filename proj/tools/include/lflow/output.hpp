#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lflow/asymptotics.hpp"
#include "lflow/diagnostics.hpp"
#include "lflow/problem.hpp"

namespace lflow::cli {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

inline constexpr const char* kTraceHeader =
    "t,grad_sup,ut_min,ut_max,u_min,u_max,energy_ut,energy_vtx,speed_mean,speed_dev,"
    "curvature_max,profile_dist";

void write_trace_csv(std::ostream& out, std::span<const DiagnosticsRecord> trace);

/// Two columns with the given header names, one row per node.
void write_columns_csv(std::ostream& out, const std::string& x_name, const std::string& y_name,
                       std::span<const double> xs, std::span<const double> ys);

/// Overlay of the final state (shifted to zero mean) and the translator.
void write_profile_svg(std::ostream& out, const Grid& grid, std::span<const double> u,
                       const TranslatorProfile& translator, const std::string& title);

}  // namespace lflow::cli
