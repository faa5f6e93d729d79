#include "osp/bench.h"

#include <map>
#include <sstream>

using namespace std;

namespace osp {

namespace {

string fraction_label(const pair<int, int> &fraction) {
    return to_string(fraction.first) + "/" + to_string(fraction.second);
}

} // namespace

string run_benchmark(const BenchConfig &config) {
    ostringstream out;
    out << "task,fraction,strategy,expansions,generated,time_ms,utility,cost,"
           "solved,actions_compiled,vars_compiled\n";
    // (task, fraction, strategy) -> expansions of solved rows, for the summary.
    map<pair<string, string>, map<Strategy, long>> expansions;
    for (const auto &[name, task] : config.tasks) {
        for (const auto &fraction : config.fractions) {
            OspTask bounded = task;
            if (!task.budget_spec.is_fraction)
                throw TaskError(
                    "task '" + name +
                    "' has no cstar; fraction budgets need budget-frac form");
            bounded.budget_spec.numerator = fraction.first;
            bounded.budget_spec.denominator = fraction.second;
            bounded.budget = bounded.budget_spec.resolve();
            for (Strategy strategy : config.strategies) {
                CompilationResult compilation =
                    compile_for_strategy(bounded, strategy, config.options);
                out << name << "," << fraction_label(fraction) << ","
                    << strategy_name(strategy) << ",";
                try {
                    Solution solution = bfbb_solve(
                        compilation.task, heuristic_max_fact, config.limits);
                    out << solution.stats.expansions << ","
                        << solution.stats.generated << ","
                        << static_cast<long>(solution.stats.wall_time_ms) << ","
                        << solution.utility << "," << solution.cost << ",1,";
                    expansions[{name, fraction_label(fraction)}][strategy] =
                        solution.stats.expansions;
                } catch (const CapExceededError &error) {
                    out << error.states_visited << ",0,0,0,0,0,";
                }
                out << compilation.task.num_actions() << ","
                    << compilation.task.num_variables() << "\n";
            }
        }
    }
    out << "summary,domain,fraction,blind_pct,pretotal_pct\n";
    for (const auto &[key, per_strategy] : expansions) {
        if (!per_strategy.count(Strategy::base))
            continue;
        long base = per_strategy.at(Strategy::base);
        auto relative_change = [&](Strategy strategy) -> string {
            if (!per_strategy.count(strategy) || base == 0)
                return "-";
            long other = per_strategy.at(strategy);
            long pct = base == 0 ? 0 : (other - base) * 100 / base;
            if (pct > -config.change_threshold_percent &&
                pct < config.change_threshold_percent)
                return "0";
            return (pct > 0 ? "+" : "") + to_string(pct);
        };
        out << "summary," << key.first << "," << key.second << ","
            << relative_change(Strategy::blind) << ","
            << relative_change(Strategy::pretotal) << "\n";
    }
    return out.str();
}

} // namespace osp
