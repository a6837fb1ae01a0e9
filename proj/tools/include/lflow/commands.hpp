#pragma once

#include <exception>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "lflow/config.hpp"
#include "lflow/diagnostics.hpp"
#include "lflow/run.hpp"

namespace lflow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,   // bad config, incompatible or non-spacelike initial data
  kExitSpacelike = 2,    // the flow left the spacelike domain
  kExitNumerical = 3,    // non-finite values, singular systems, failed fits
  kExitChecksFailed = 4, // verify: at least one checker failed
  kExitIo = 5,
};

/// Maps a library exception to its documented exit code.
int exit_code_for(const std::exception& e);

struct CommandOptions {
  std::filesystem::path output_dir = ".";
  bool quiet = false;
  bool plot = false;
};

struct VerifyOutcome {
  std::vector<CheckReport> checks;
  bool all_pass = true;
};

/// Evaluates every enabled checker on a finished run.
VerifyOutcome evaluate_checks(const RunConfig& cfg, const RunResult& result);

struct SweepRow {
  double theta_left = 0.0;
  double theta_right = 0.0;
  double d = 0.0;
  double speed = 0.0;
  double speed_dev = 0.0;
  double profile_dist = 0.0;
  double decay_rate = 0.0;
  std::string status = "ok";
};

/// Runs the Cartesian product of the sweep axes on a worker pool. Rows come
/// back sorted by (theta_left, theta_right, d); a failing run is recorded in
/// its row's status. Throws ValidationError when every axis is empty.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

void write_summary_csv(std::ostream& out, const std::vector<SweepRow>& rows);

int cmd_run(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
               std::ostream& err);
int cmd_sweep(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
              std::ostream& err);
int cmd_profile(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace lflow::cli
