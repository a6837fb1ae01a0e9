#include <benchmark/benchmark.h>

#include <vector>

#include "lflow/numerics.hpp"
#include "lflow/problem.hpp"
#include "lflow/solver.hpp"

namespace {

lflow::ProblemSpec spec_for(benchmark::State& st) {
  lflow::ProblemSpec s;
  s.theta_left = -0.4;
  s.theta_right = 0.4;
  s.nodes = static_cast<std::size_t>(st.range(0));
  return s;
}

void BM_Rhs(benchmark::State& st) {
  const lflow::ProblemSpec spec = spec_for(st);
  const lflow::State u{0.0, lflow::sample_initial(spec)};
  for (auto _ : st) benchmark::DoNotOptimize(lflow::rhs(u, spec));
}

void BM_ExplicitStep(benchmark::State& st) {
  const lflow::ProblemSpec spec = spec_for(st);
  const lflow::State u{0.0, lflow::sample_initial(spec)};
  const double dt = lflow::stable_dt(u, spec, 0.45);
  for (auto _ : st) benchmark::DoNotOptimize(lflow::step_explicit(u, spec, dt));
}

void BM_SemiImplicitStep(benchmark::State& st) {
  const lflow::ProblemSpec spec = spec_for(st);
  const lflow::State u{0.0, lflow::sample_initial(spec)};
  for (auto _ : st) benchmark::DoNotOptimize(lflow::step_semi_implicit(u, spec, 1e-3));
}

void BM_Thomas(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::vector<double> lower(n, -1.0), diag(n, 4.0), upper(n, -1.0), rhs(n), scratch(n);
  for (auto _ : st) {
    std::fill(rhs.begin(), rhs.end(), 1.0);
    lflow::solve_tridiagonal(lower, diag, upper, rhs, scratch);
    benchmark::DoNotOptimize(rhs.data());
  }
}

}  // namespace

BENCHMARK(BM_Rhs)->Arg(201)->Arg(401)->Arg(801);
BENCHMARK(BM_ExplicitStep)->Arg(201)->Arg(401)->Arg(801);
BENCHMARK(BM_SemiImplicitStep)->Arg(201)->Arg(401)->Arg(801);
BENCHMARK(BM_Thomas)->Arg(201)->Arg(401)->Arg(801);

BENCHMARK_MAIN();
