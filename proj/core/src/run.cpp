#include "lflow/run.hpp"

#include <algorithm>
#include <cmath>

#include "lflow/errors.hpp"
#include "lflow/solver.hpp"
#include "stepper.hpp"

namespace lflow {

RunResult run(const ProblemSpec& spec) {
  validate(spec);

  RunResult result;
  result.translator = build_translator(spec);
  const double speed = result.translator.speed;
  result.final_state = State{0.0, sample_initial(spec)};
  result.trace.push_back(snapshot(result.final_state, spec, &result.translator));

  detail::Stepper stepper(spec);
  std::vector<double> next(spec.nodes);
  State& state = result.final_state;
  int steady_count = detect_translation(result.trace.back(), speed, spec.steady_eps) ? 1 : 0;

  for (std::size_t k = 1; state.t < spec.t_end; ++k) {
    const double target = std::min(static_cast<double>(k) * spec.snapshot_every, spec.t_end);
    while (state.t < target) {
      double dt = spec.dt.adaptive ? stepper.stable_dt(state.u, spec.dt.cfl_safety)
                                   : spec.dt.fixed_dt;
      const double remaining = target - state.t;
      bool lands = false;
      if (remaining <= dt * (1.0 + 1e-9)) {
        dt = remaining;
        lands = true;
      }
      for (int attempt = 0;; ++attempt) {
        try {
          if (spec.scheme == Scheme::Explicit) {
            stepper.explicit_step(state.u, dt, next);
          } else {
            stepper.semi_implicit_step(state.u, dt, next);
          }
          break;
        } catch (const SpacelikeViolation&) {
          if (attempt >= spec.retry_max) throw;
        } catch (const NumericalFailure&) {
          if (attempt >= spec.retry_max) throw;
        }
        ++result.rejected_steps;
        dt *= 0.5;
        lands = false;
      }
      state.u.swap(next);
      state.t = lands ? target : state.t + dt;
      ++result.steps;
    }

    result.trace.push_back(snapshot(state, spec, &result.translator));
    if (detect_translation(result.trace.back(), speed, spec.steady_eps)) {
      ++steady_count;
    } else {
      steady_count = 0;
    }
    if (spec.stop_when_steady && steady_count >= spec.steady_snapshots) {
      result.reached_steady = true;
      break;
    }
  }
  result.reached_steady = result.reached_steady || steady_count >= spec.steady_snapshots;
  return result;
}

}  // namespace lflow
