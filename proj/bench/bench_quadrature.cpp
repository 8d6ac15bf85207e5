// Serial reference against the OpenMP path for the quadrature kernels.

#include <benchmark/benchmark.h>

#include <cmath>

#include "surfint/catalog.hpp"
#include "surfint/quadrature.hpp"

using namespace surfint;

namespace {

QuadratureSpec spec(Execution execution, int panels) {
  QuadratureSpec s;
  s.panels_u = s.panels_v = panels;
  s.boundary_panels = 4 * panels;
  s.execution = execution;
  return s;
}

void surface(benchmark::State& state, Execution execution) {
  const Chart& torus = catalog_lookup("torus").chart;
  const QuadratureSpec s = spec(execution, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        surface_sum<double>(torus, [](const FramedPoint& p) { return p.K * std::exp(p.X.z()) + p.H; }, s));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.surface_node_count()));
}

void boundary(benchmark::State& state, Execution execution) {
  const Chart& cap = catalog_lookup("cap-pi3").chart;
  const QuadratureSpec s = spec(execution, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_sum<double>(cap, [](const BoundaryPoint& b) { return b.kappa_g; }, s));
}

}  // namespace

BENCHMARK_CAPTURE(surface, serial, Execution::serial)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(surface, parallel, Execution::parallel)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(boundary, serial, Execution::serial)->Arg(32)->Arg(256);
BENCHMARK_CAPTURE(boundary, parallel, Execution::parallel)->Arg(32)->Arg(256);
BENCHMARK_MAIN();
