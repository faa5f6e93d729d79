#include "osp/io.h"
#include "osp/selective.h"
#include "osp/unit_effect.h"

#include <benchmark/benchmark.h>

using namespace osp;

namespace {

void BM_ClassifyAll(benchmark::State &state) {
    GenParams params;
    params.seed = 13;
    params.num_vars = static_cast<int>(state.range(0));
    params.num_actions = static_cast<int>(state.range(0)) * 3;
    params.max_domain = 4;
    OspTask task = generate_task(params);
    for (auto _ : state) {
        auto reports = classify_all(task);
        benchmark::DoNotOptimize(reports.size());
    }
}
BENCHMARK(BM_ClassifyAll)->Arg(4)->Arg(8)->Arg(16);

void BM_UnitEffectCompile(benchmark::State &state) {
    GenParams params;
    params.seed = 13;
    params.num_vars = static_cast<int>(state.range(0));
    params.num_actions = static_cast<int>(state.range(0)) * 3;
    params.max_domain = 4;
    OspTask task = complete_preconditions(generate_task(params));
    StrategyFilter all{Strategy::unit_all, {}};
    for (int i = 0; i < task.num_actions(); ++i)
        all.selected.push_back(i);
    for (auto _ : state) {
        CompiledTask compiled = unit_effect_compile(task, all);
        benchmark::DoNotOptimize(compiled.task.num_actions());
    }
}
BENCHMARK(BM_UnitEffectCompile)->Arg(4)->Arg(8)->Arg(16);

void BM_ParseSerialize(benchmark::State &state) {
    GenParams params;
    params.seed = 13;
    params.num_vars = 8;
    params.num_actions = 24;
    std::string text = serialize_task(generate_task(params));
    for (auto _ : state) {
        OspTask task = parse_task(text);
        benchmark::DoNotOptimize(task.num_actions());
    }
}
BENCHMARK(BM_ParseSerialize);

} // namespace
