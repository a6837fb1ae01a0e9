#include "lflow/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "lflow/errors.hpp"
#include "lflow/output.hpp"
#include "lflow/solver.hpp"

namespace lflow::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const CommandOptions& opts, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(opts.output_dir, ec);
  const std::filesystem::path path = opts.output_dir / name;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  return out;
}

double scheme_tol_for(const RunConfig& cfg) {
  return cfg.scheme_tol > 0.0 ? cfg.scheme_tol : default_scheme_tol(cfg.spec.grid());
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

std::string sanitize(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; },
                  ';');
  return s;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const GridMismatch*>(&e)) {
    return kExitValidation;
  }
  if (dynamic_cast<const SpacelikeViolation*>(&e) || dynamic_cast<const DomainViolation*>(&e) ||
      dynamic_cast<const RangeViolation*>(&e)) {
    return kExitSpacelike;
  }
  if (dynamic_cast<const IoError*>(&e)) {
    return kExitIo;
  }
  return kExitNumerical;
}

VerifyOutcome evaluate_checks(const RunConfig& cfg, const RunResult& result) {
  VerifyOutcome outcome;
  const auto& trace = result.trace;
  const double speed = result.translator.speed;
  const double tol = scheme_tol_for(cfg);
  const CheckToggles& on = cfg.checks;

  if (on.ut_bracket) outcome.checks.push_back(check_ut_bracket(trace, tol));
  if (on.energy_monotone) outcome.checks.push_back(check_energy_monotone(trace));
  if (on.ut_sandwich) outcome.checks.push_back(check_ut_sandwich(trace, speed, tol));
  if (on.sup_integral) outcome.checks.push_back(check_sup_integral(trace, cfg.spec.d, tol));
  if (on.gradient_bound) outcome.checks.push_back(check_gradient_bound(trace));
  if (on.flux_identity) outcome.checks.push_back(check_flux_identity(trace, speed));
  if (on.decay) {
    CheckReport r;
    r.name = "decay_fit";
    if (detect_translation(trace.front(), speed, cfg.spec.steady_eps)) {
      r.detail = "skipped: the initial state is already translating";
    } else {
      try {
        const DecayFit fit = fit_decay(trace, cfg.decay_tail);
        std::ostringstream os;
        os << "rate " << fit.rate << ", r^2 " << fit.r_squared << ", " << fit.decades
           << " decades over " << fit.points << " snapshots";
        r.detail = os.str();
        r.pass = fit.rate > 0.0 && fit.r_squared >= 0.99;
      } catch (const InsufficientData& e) {
        r.pass = false;
        r.detail = e.what();
      }
    }
    outcome.checks.push_back(r);
  }
  if (on.c0_bound) {
    if (speed == 0.0) {
      outcome.checks.push_back(check_c0_bound(trace, tol));
    } else {
      CheckReport r;
      r.name = "c0_bound";
      r.detail = "skipped: applies only when A = 0";
      outcome.checks.push_back(r);
    }
  }
  for (const auto& c : outcome.checks) outcome.all_pass = outcome.all_pass && c.pass;
  return outcome;
}

int cmd_run(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const RunResult result = run(cfg.spec);
    const Grid grid = cfg.spec.grid();
    const std::vector<double> xs = grid.coordinates();
    {
      auto f = open_output(opts, cfg.trace_file);
      write_trace_csv(f, result.trace);
    }
    {
      auto f = open_output(opts, cfg.profile_file);
      write_columns_csv(f, "x", "u", xs, result.final_state.u);
    }
    {
      auto f = open_output(opts, cfg.translator_file);
      write_columns_csv(f, "x", "phi", xs, result.translator.samples);
    }
    if (cfg.plot || opts.plot) {
      auto f = open_output(opts, cfg.plot_file);
      write_profile_svg(f, grid, result.final_state.u, result.translator,
                        "t = " + format_double(result.final_state.t));
    }
    if (!opts.quiet) {
      const DiagnosticsRecord& last = result.trace.back();
      out << "A=" << format_double(result.translator.speed)
          << " speed_dev=" << format_double(last.speed_dev)
          << " profile_dist=" << format_double(last.profile_dist)
          << " t=" << format_double(last.t) << " steps=" << result.steps
          << " translator=" << to_string(result.translator.kind) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const RunResult result = run(cfg.spec);
    const VerifyOutcome outcome = evaluate_checks(cfg, result);
    if (!opts.quiet) {
      out << std::left << std::setw(18) << "check" << std::setw(8) << "result" << "detail\n";
      for (const CheckReport& c : outcome.checks) {
        out << std::left << std::setw(18) << c.name << std::setw(8) << (c.pass ? "PASS" : "FAIL")
            << c.detail << '\n';
      }
      out << (outcome.all_pass ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return static_cast<int>(outcome.all_pass ? kExitOk : kExitChecksFailed);
  });
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  if (cfg.sweep.empty()) {
    throw ValidationError("sweep requires at least one non-empty axis "
                          "(sweep_theta_left, sweep_theta_right, sweep_d)");
  }
  const ProblemSpec& base = cfg.spec;
  const std::vector<double> rights =
      cfg.sweep.theta_right.empty() ? std::vector<double>{base.theta_right} : cfg.sweep.theta_right;
  const std::vector<double> lefts =
      cfg.sweep.theta_left.empty() ? std::vector<double>{base.theta_left} : cfg.sweep.theta_left;
  const std::vector<double> ds = cfg.sweep.d.empty() ? std::vector<double>{base.d} : cfg.sweep.d;

  std::vector<SweepRow> rows;
  for (double r : rights) {
    if (cfg.sweep.symmetric) {
      for (double d : ds) rows.push_back({-r, r, d});
    } else {
      for (double l : lefts) {
        for (double d : ds) rows.push_back({l, r, d});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.theta_left, a.theta_right, a.d) < std::tie(b.theta_left, b.theta_right, b.d);
  });

  auto execute = [&](SweepRow& row) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.speed = row.speed_dev = row.profile_dist = row.decay_rate = nan;
    try {
      ProblemSpec spec = base;
      spec.theta_left = row.theta_left;
      spec.theta_right = row.theta_right;
      spec.d = row.d;
      row.speed = translation_speed(spec.theta_left, spec.theta_right, spec.d, spec.flux);
      const RunResult result = run(spec);
      row.speed_dev = result.trace.back().speed_dev;
      row.profile_dist = result.trace.back().profile_dist;
      try {
        row.decay_rate = fit_decay(result.trace, cfg.decay_tail).rate;
      } catch (const InsufficientData&) {
      }
      row.status = "ok";
    } catch (const std::exception& e) {
      row.status = sanitize(std::string("error ") + std::to_string(exit_code_for(e)) + ": " +
                            e.what());
    }
  };

  std::size_t workers = cfg.threads > 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, rows.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) execute(rows[i]);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "theta_left,theta_right,d,speed,speed_dev,profile_dist,decay_rate,status\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.theta_left) << ',' << format_double(r.theta_right) << ','
        << format_double(r.d) << ',' << format_double(r.speed) << ','
        << format_double(r.speed_dev) << ',' << format_double(r.profile_dist) << ','
        << format_double(r.decay_rate) << ',' << r.status << '\n';
  }
}

int cmd_sweep(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<SweepRow> rows = run_sweep(cfg);
    auto f = open_output(opts, cfg.summary_file);
    write_summary_csv(f, rows);
    if (!opts.quiet) {
      const auto failed = std::count_if(rows.begin(), rows.end(),
                                        [](const SweepRow& r) { return r.status != "ok"; });
      out << rows.size() << " runs, " << failed << " failed; summary in "
          << (opts.output_dir / cfg.summary_file).string() << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_profile(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const TranslatorProfile profile = build_translator(cfg.spec);
    const std::vector<double> xs = cfg.spec.grid().coordinates();
    auto f = open_output(opts, cfg.translator_file);
    write_columns_csv(f, "x", "phi", xs, profile.samples);
    if (!opts.quiet) {
      out << "A=" << format_double(profile.speed) << " c=" << format_double(profile.c)
          << " translator=" << to_string(profile.kind) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace lflow::cli
