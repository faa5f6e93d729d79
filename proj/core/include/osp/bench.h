#ifndef OSP_BENCH_H
#define OSP_BENCH_H

#include "osp/bfbb.h"
#include "osp/selective.h"
#include "osp/unit_effect.h"

#include <string>
#include <utility>
#include <vector>

namespace osp {

struct BenchConfig {
    // Task name plus task; fraction budgets require a cstar in the task's
    // budget spec.
    std::vector<std::pair<std::string, OspTask>> tasks;
    std::vector<std::pair<int, int>> fractions = {
        {1, 4}, {1, 2}, {3, 4}, {1, 1}};
    std::vector<Strategy> strategies = {
        Strategy::base, Strategy::blind, Strategy::pretotal};
    SearchLimits limits;
    CompileOptions options;
    // Relative-change summary reporting threshold, in percent.
    int change_threshold_percent = 10;
};

/*
  For each task x fraction x strategy: resolve the budget from cstar, compile,
  solve with BFBB and emit one CSV row; rows past the caps are recorded as
  unsolved. A summary block of relative expansion changes base->blind and
  base->pretotal (values below the threshold reported as 0) follows the rows.
*/
std::string run_benchmark(const BenchConfig &config);

} // namespace osp

#endif
