#include <benchmark/benchmark.h>

#include <cmath>

#include "hbloch/catalog.hpp"
#include "hbloch/grid_kernel.hpp"
#include "hbloch/seminorm.hpp"

using namespace hbloch;

namespace {

// beta*_1 integrand of f_{1,0.5}; pre-Schwarzian weight of example32 is the costlier one
DiskFunctional light() {
  static const HarmonicMap f = make_f_nu_t(1.0, 0.5);
  return [](const ComplexPoint& z) { return beta_weight(z, 1.0) * std::sqrt(std::abs(jacobian(f, z))); };
}

DiskFunctional heavy() {
  static const HarmonicMap f = make_example32(0.3);
  return [](const ComplexPoint& z) { return beta_weight(z, 1.0) * std::abs(pre_schwarzian(f, z)); };
}

GridConfig config(int angles) {
  GridConfig c;
  c.angular_samples = angles;
  return c;
}

template <class Scan>
void run(benchmark::State& state, const DiskFunctional& fn, Scan scan) {
  const GridConfig cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = scan(fn, cfg);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * (cfg.ladder_depth + 1) * cfg.angular_samples);
}

void BM_light_serial(benchmark::State& s) { run(s, light(), scan_ladder_serial); }
void BM_light_parallel(benchmark::State& s) { run(s, light(), scan_ladder_parallel); }
void BM_heavy_serial(benchmark::State& s) { run(s, heavy(), scan_ladder_serial); }
void BM_heavy_parallel(benchmark::State& s) { run(s, heavy(), scan_ladder_parallel); }

}  // namespace

BENCHMARK(BM_light_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_light_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_heavy_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_heavy_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
