// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lflow/asymptotics.hpp"
#include "lflow/diagnostics.hpp"
#include "lflow/flux.hpp"
#include "lflow/output.hpp"
#include "lflow/problem.hpp"
#include "lflow/run.hpp"
#include "lflow/solver.hpp"

using namespace lflow;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("AC%-2d %-28s %s  %s\n", id, name, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const std::string& line) {
  std::printf("     %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

ProblemSpec base_spec(double theta_left, double theta_right, FluxFunction flux) {
  ProblemSpec s;
  s.d = 1.0;
  s.theta_left = theta_left;
  s.theta_right = theta_right;
  s.flux = std::move(flux);
  s.nodes = 401;
  s.scheme = Scheme::Explicit;
  s.u0.tag = ProfileTag::CubicBlend;
  s.t_end = 30.0;
  return s;
}

struct NamedRun {
  const char* name;
  ProblemSpec spec;
  RunResult result;
  double seconds = 0.0;
};

RunResult timed_run(const ProblemSpec& spec, double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r = run(spec);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string trace_csv(const RunResult& r) {
  std::ostringstream os;
  cli::write_trace_csv(os, r.trace);
  cli::write_columns_csv(os, "x", "u", r.final_state.u, r.final_state.u);
  return os.str();
}

// Residual of the discrete operator on the sampled translator.
double translator_residual(const ProblemSpec& spec, bool interior_only) {
  const TranslatorProfile phi = build_translator(spec);
  const std::vector<double> r = rhs(State{0.0, phi.samples}, spec);
  const std::size_t lo = interior_only ? 1 : 0;
  const std::size_t hi = interior_only ? r.size() - 1 : r.size();
  double worst = 0.0;
  for (std::size_t i = lo; i < hi; ++i) worst = std::max(worst, std::abs(r[i] - phi.speed));
  return worst;
}

bool flux_properties(const FluxFunction& f, std::mt19937_64& rng, std::string& detail) {
  const double smax = f.max_slope();
  std::uniform_real_distribution<double> dist(-smax, smax);
  std::vector<double> s(1000);
  for (double& x : s) x = dist(rng);
  std::sort(s.begin(), s.end());

  double roundtrip = 0.0, deriv = 0.0;
  bool positive = true, monotone = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    roundtrip = std::max(roundtrip, std::abs(f.inverse(f.value(s[i])) - s[i]));
    positive = positive && f.derivative(s[i]) > 0.0;
    if (i > 0 && s[i] > s[i - 1]) monotone = monotone && f.value(s[i]) > f.value(s[i - 1]);
    if (std::abs(s[i]) <= 0.99) {
      const double hstep = 1e-6;
      const double fd = (f.value(s[i] + hstep) - f.value(s[i] - hstep)) / (2 * hstep);
      deriv = std::max(deriv, std::abs(fd - f.derivative(s[i])) / f.derivative(s[i]));
    }
  }
  const bool grid_ok = validate_flux(f, 1000).pass;
  detail += std::string(f.name()) + ": roundtrip " + fmt("%.1e", roundtrip) + ", v' rel err " +
            fmt("%.1e", deriv) + (positive ? "" : ", v'<=0") + (monotone ? "" : ", non-monotone") +
            (grid_ok ? "" : ", grid sweep failed") + "; ";
  return roundtrip <= 1e-9 && deriv <= 1e-6 && positive && monotone && grid_ok;
}

}  // namespace

int main() {
  const FluxFunction cubic = FluxFunction::named_custom("cubic", 1.0);

  std::vector<NamedRun> runs;
  runs.push_back({"grim-reaper", base_spec(-0.4, 0.4, FluxFunction::mcf()), {}});
  runs.push_back({"straight-line", base_spec(0.3, 0.3, FluxFunction::mcf()), {}});
  runs.push_back({"parabola", base_spec(-0.5, 0.5, FluxFunction::heat()), {}});
  for (auto& r : runs) {
    r.result = timed_run(r.spec, r.seconds);
    info(std::string(r.name) + ": t=" + fmt("%g", r.result.final_state.t) + " steps=" +
         std::to_string(r.result.steps) + " wall=" + fmt("%.2fs", r.seconds));
  }

  {
    const RunResult& r = runs[0].result;
    const DiagnosticsRecord& last = r.trace.back();
    const double a = std::atanh(0.4);
    const bool pass = std::abs(r.translator.speed - a) <= 1e-15 && last.speed_dev < 1e-3 &&
                      last.profile_dist <= 5e-3 && r.translator.kind == TranslatorKind::GrimReaper;
    report(1, "grim-reaper convergence", pass,
           "speed_dev " + fmt("%.2e", last.speed_dev) + ", profile_dist " +
               fmt("%.2e", last.profile_dist) + ", wall " + fmt("%.2fs", runs[0].seconds));
  }
  {
    const RunResult& r = runs[1].result;
    const DiagnosticsRecord& last = r.trace.back();
    const CheckReport c0 = check_c0_bound(r.trace, 1e-6);
    const bool pass = r.translator.speed == 0.0 && last.profile_dist <= 5e-3 && c0.pass;
    report(2, "straight-line convergence", pass,
           "A " + fmt("%g", r.translator.speed) + ", profile_dist " +
               fmt("%.2e", last.profile_dist) + ", c0 " + c0.detail);
  }
  {
    const RunResult& r = runs[2].result;
    const DiagnosticsRecord& last = r.trace.back();
    const bool pass = r.translator.speed == 0.5 && last.profile_dist <= 5e-3;
    report(3, "parabola limit", pass,
           "A " + fmt("%.17g", r.translator.speed) + ", profile_dist " +
               fmt("%.2e", last.profile_dist));
  }
  {
    bool pass = true;
    double worst = 0.0;
    for (const auto& r : runs) {
      const CheckReport c = check_flux_identity(r.result.trace, r.result.translator.speed);
      pass = pass && c.pass;
      for (const auto& rec : r.result.trace)
        worst = std::max(worst, std::abs(rec.speed_mean - r.result.translator.speed));
    }
    report(4, "discrete flux identity", pass,
           "max |speed_mean - A| " + fmt("%.2e", worst) + " (bound " + fmt("%.2e", 10 * kEps) + ")");
  }
  {
    bool pass = true;
    std::string failed;
    for (const auto& r : runs) {
      const auto& tr = r.result.trace;
      const double a = r.result.translator.speed;
      for (const CheckReport& c :
           {check_ut_bracket(tr, 1e-6), check_energy_monotone(tr), check_ut_sandwich(tr, a, 1e-6),
            check_sup_integral(tr, r.spec.d, 1e-6), check_gradient_bound(tr)}) {
        if (!c.pass) {
          pass = false;
          failed += std::string(r.name) + "/" + c.name + " ";
        }
      }
    }
    report(5, "invariant checkers", pass, pass ? "5 checkers x 3 runs" : "failed: " + failed);
  }
  {
    try {
      const DecayFit fit = fit_decay(runs[0].result.trace, 0.5);
      const bool pass = fit.rate > 0.0 && fit.r_squared >= 0.99 && fit.decades >= 2.0;
      report(6, "exponential decay", pass,
             "rate " + fmt("%.3g", fit.rate) + ", r^2 " + fmt("%.5f", fit.r_squared) +
                 ", decades " + fmt("%.2f", fit.decades) + ", points " +
                 std::to_string(fit.points));
    } catch (const std::exception& e) {
      report(6, "exponential decay", false, e.what());
    }
  }
  {
    ProblemSpec semi = base_spec(-0.4, 0.4, FluxFunction::mcf());
    semi.nodes = 201;
    semi.t_end = 1.0;
    semi.stop_when_steady = false;
    ProblemSpec ref = semi;
    semi.scheme = Scheme::SemiImplicit;
    semi.dt = TimeStepPolicy::fixed(1e-3);
    ref.dt = TimeStepPolicy::cfl(0.045);
    const RunResult a = run(semi);
    const RunResult b = run(ref);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.final_state.u.size(); ++i)
      diff = std::max(diff, std::abs(a.final_state.u[i] - b.final_state.u[i]));
    report(7, "scheme cross-validation", diff <= 1e-4 && a.final_state.t == 1.0 &&
                                             b.final_state.t == 1.0,
           "sup |u_semi - u_ref| " + fmt("%.2e", diff) + " at t=1");
  }
  {
    // Rounding-level residuals (exact translators) count as converged.
    const double floor = 1e-10;
    const std::size_t ns[] = {101, 201, 401};
    bool pass = true;
    std::string detail;
    const FluxFunction fluxes[] = {FluxFunction::mcf(), FluxFunction::heat(), cubic};
    for (const FluxFunction& f : fluxes) {
      double res[3], inner[3];
      for (int k = 0; k < 3; ++k) {
        ProblemSpec s = base_spec(-0.4, 0.4, f);
        s.nodes = ns[k];
        res[k] = translator_residual(s, false);
        inner[k] = translator_residual(s, true);
      }
      double order = std::numeric_limits<double>::infinity();
      double inner_order = order;
      for (int k = 0; k < 2; ++k) {
        if (res[k + 1] > floor) order = std::min(order, std::log2(res[k] / res[k + 1]));
        if (inner[k + 1] > floor) inner_order = std::min(inner_order, std::log2(inner[k] / inner[k + 1]));
      }
      const bool ok = order >= 1.9;
      pass = pass && ok;
      detail += std::string(f.name()) + " " + (std::isinf(order) ? "exact" : fmt("%.2f", order)) + "; ";
      info(std::string(f.name()) + ": residuals " + fmt("%.2e", res[0]) + " " + fmt("%.2e", res[1]) +
           " " + fmt("%.2e", res[2]) + ", interior-node order " +
           (std::isinf(inner_order) ? std::string("exact") : fmt("%.2f", inner_order)));
    }
    report(8, "translator residual order", pass, "min order " + detail);
  }
  {
    std::mt19937_64 rng(20261014);
    std::string detail;
    bool pass = true;
    for (const FluxFunction& f : {FluxFunction::mcf(), FluxFunction::heat(), cubic})
      pass = flux_properties(f, rng, detail) && pass;
    report(9, "flux property suites", pass, detail);
  }
  {
    bool pass = true;
    for (const auto& r : runs) {
      const RunResult again = run(r.spec);
      pass = pass && trace_csv(again) == trace_csv(r.result);
    }
    report(10, "determinism", pass, pass ? "3 reruns byte-identical" : "CSV output differs");
  }

  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
