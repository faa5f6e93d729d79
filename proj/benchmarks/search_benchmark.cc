#include "osp/bfbb.h"
#include "osp/io.h"
#include "osp/oracle.h"
#include "osp/unit_effect.h"

#include <benchmark/benchmark.h>

using namespace osp;

namespace {

OspTask generated(uint64_t seed, int vars, int actions) {
    GenParams params;
    params.seed = seed;
    params.num_vars = vars;
    params.num_actions = actions;
    params.max_domain = 4;
    return generate_task(params);
}

void BM_BfbbOriginal(benchmark::State &state) {
    OspTask task = generated(7, static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) * 2);
    for (auto _ : state) {
        Solution solution = bfbb_solve(task);
        benchmark::DoNotOptimize(solution.utility);
    }
}
BENCHMARK(BM_BfbbOriginal)->Arg(3)->Arg(4)->Arg(5);

void BM_BfbbUnitEffect(benchmark::State &state) {
    OspTask task = generated(7, static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) * 2);
    CompilationResult result = compile_for_strategy(task, Strategy::unit_all);
    for (auto _ : state) {
        Solution solution = bfbb_solve(result.task);
        benchmark::DoNotOptimize(solution.utility);
    }
}
BENCHMARK(BM_BfbbUnitEffect)->Arg(3)->Arg(4)->Arg(5);

void BM_Oracle(benchmark::State &state) {
    OspTask task = generated(11, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Solution solution = brute_force_optimal(task);
        benchmark::DoNotOptimize(solution.utility);
    }
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
