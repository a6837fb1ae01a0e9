#pragma once

#include <cstddef>
#include <vector>

#include "lflow/asymptotics.hpp"
#include "lflow/diagnostics.hpp"
#include "lflow/problem.hpp"

namespace lflow {

struct RunResult {
  State final_state;
  std::vector<DiagnosticsRecord> trace;
  TranslatorProfile translator;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  bool reached_steady = false;
};

/// Integrates from u0 at t = 0 to t_end, recording a snapshot at t = 0 and at
/// every multiple of snapshot_every (plus t_end). Stops early once
/// detect_translation holds on steady_snapshots consecutive snapshots.
///
/// A step whose result leaves the spacelike domain is retried with half the
/// step, up to retry_max times; persistent failure rethrows.
RunResult run(const ProblemSpec& spec);

}  // namespace lflow
