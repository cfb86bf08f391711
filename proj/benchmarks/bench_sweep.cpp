#include <benchmark/benchmark.h>

#include <cstdlib>
#include <string>

#include "rfbeats/cli/presets.hpp"
#include "rfbeats/cli/runner.hpp"

using namespace rfbeats::cli;

namespace {

// Full figure sweeps through the CLI runner; the argument is the worker count.
void BM_PresetSweep(benchmark::State& state, const char* name) {
    ::setenv("RFBEATS_THREADS", std::to_string(state.range(0)).c_str(), 1);
    const RunConfig c = preset(name);
    for (auto _ : state) benchmark::DoNotOptimize(run(c));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(c.sweep_points.size()));
    ::unsetenv("RFBEATS_THREADS");
}
BENCHMARK_CAPTURE(BM_PresetSweep, fig3a, "fig3a")->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(BM_PresetSweep, fig8a, "fig8a")->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(BM_PresetSweep, fig14, "fig14")->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
