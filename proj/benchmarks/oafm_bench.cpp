#include <benchmark/benchmark.h>

#include "oafm/oafm.hpp"

using namespace oafm;

static void BM_GaussLegendreRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QuadratureRule rule = gauss_legendre_rule(order, -1.0, 1.0);
    benchmark::DoNotOptimize(rule.nodes.data());
  }
}
BENCHMARK(BM_GaussLegendreRule)->Arg(8)->Arg(32)->Arg(128);

static void BM_GalerkinVector(benchmark::State& state) {
  const ProblemSpec problem = fisher();
  const QuadratureRule rule = gauss_legendre_rule(32, problem.domain.a, problem.domain.b);
  const CoefficientVector c = {0.1, -0.2, 0.3, -0.4};
  for (auto _ : state) {
    std::vector<double> g = galerkin_vector(problem, c, 0.01, rule);
    benchmark::DoNotOptimize(g.data());
  }
}
BENCHMARK(BM_GalerkinVector);

static void BM_SolveCoefficients(benchmark::State& state) {
  const ProblemSpec problems[] = {bbm(), fisher(), shock(), burgers_fisher()};
  const ProblemSpec& problem = problems[state.range(0)];
  for (auto _ : state) {
    SolveReport report = solve_coefficients(problem, 0.01);
    benchmark::DoNotOptimize(report.coefficients.data());
  }
}
BENCHMARK(BM_SolveCoefficients)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_ErrorTable(benchmark::State& state) {
  const ProblemSpec problem = fisher();
  const std::vector<double> ts = {0.001, 0.01};
  const std::vector<double> xs = default_error_grid(problem);
  for (auto _ : state) {
    auto rows = error_table(problem, ts, xs);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_ErrorTable)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
