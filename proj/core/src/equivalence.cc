#include "osp/equivalence.h"

#include <algorithm>
#include <sstream>

using namespace std;

namespace osp {

bool gaining_prefix_holds(const OspTask &task, const Plan &plan) {
    vector<int> trace;
    trace.push_back(state_utility(task, task.initial));
    State state = task.initial;
    for (int step : plan) {
        state = apply(task, state, task.actions[step]);
        trace.push_back(state_utility(task, state));
    }
    int best = *max_element(trace.begin(), trace.end());
    if (best <= trace.front())
        return false; // caller guards on improvement over the initial state
    size_t peak = 0;
    while (trace[peak] != best)
        ++peak;
    // The first peak prefix: at least as valuable as the whole plan, and its
    // last step strictly raised the utility.
    return trace[peak] >= trace.back() && trace[peak] > trace[peak - 1];
}

bool valley_shape_holds(const CompiledTask &compiled, const Plan &plan) {
    const OspTask &task = compiled.task;
    State state = task.initial;
    size_t i = 0;
    while (i < plan.size()) {
        const LedgerEntry &entry = compiled.ledger[plan[i]];
        if (entry.kind == LedgerKind::passthrough) {
            state = apply(task, state, task.actions[plan[i]]);
            ++i;
            continue;
        }
        if (entry.kind != LedgerKind::unlock)
            return false;
        int entry_utility = state_utility(task, state);
        vector<int> block_trace;
        bool seen_plus = false;
        bool descending = true;
        int previous = entry_utility;
        while (i < plan.size()) {
            const LedgerEntry &inner = compiled.ledger[plan[i]];
            state = apply(task, state, task.actions[plan[i]]);
            int utility = state_utility(task, state);
            block_trace.push_back(utility);
            if (inner.kind == LedgerKind::plus)
                seen_plus = true;
            if (!seen_plus && descending) {
                if (utility > previous)
                    return false; // rose before the first plus action
            } else {
                descending = false;
                if (utility < previous)
                    return false; // fell after the first plus action
            }
            previous = utility;
            ++i;
            if (inner.kind == LedgerKind::lock)
                break;
        }
        int exit_utility = previous;
        int bound = max(entry_utility, exit_utility);
        for (int utility : block_trace) {
            if (utility > bound)
                return false; // intermediate utility above both endpoints
        }
    }
    return true;
}

namespace {

const char *mark(bool value) {
    return value ? "1" : "0";
}

} // namespace

bool EquivalenceReport::all_pass() const {
    if (!original_bfbb_match)
        return false;
    if (gaining_prefix_checked && !gaining_prefix_ok)
        return false;
    for (const StrategyOutcome &outcome : outcomes) {
        if (!outcome.pass())
            return false;
    }
    return true;
}

EquivalenceReport check_equivalence(
    const OspTask &task, const vector<Strategy> &strategies,
    const OracleCaps &caps, const CompileOptions &options,
    const string &task_name) {
    EquivalenceReport report;
    report.task_name = task_name;
    report.seed = 0;

    Solution original = brute_force_optimal(task, caps);
    report.original_utility = original.utility;
    report.original_cost = original.cost;
    report.original_bfbb_match =
        bfbb_solve(task).utility == original.utility;

    if (original.utility > state_utility(task, task.initial)) {
        report.gaining_prefix_checked = true;
        report.gaining_prefix_ok = gaining_prefix_holds(task, original.plan);
    }

    for (Strategy strategy : strategies) {
        StrategyOutcome outcome;
        outcome.strategy = strategy;
        CompilationResult compilation =
            compile_for_strategy(task, strategy, options);
        StatePredicate prefer = nullptr;
        if (compilation.compiled) {
            const CompiledTask *compiled = &*compilation.compiled;
            prefer = [compiled](const State &state) {
                return compiled->is_closed(state);
            };
        }
        Solution solved = brute_force_optimal(compilation.task, caps, prefer);
        outcome.utility = solved.utility;
        outcome.cost = solved.cost;
        outcome.value_equal = solved.utility == original.utility;
        outcome.cost_equal = solved.cost == original.cost;
        if (!outcome.value_equal || !outcome.cost_equal) {
            ostringstream note;
            note << "optimal (" << solved.utility << "," << solved.cost
                 << ") vs original (" << original.utility << ","
                 << original.cost << ")";
            outcome.note = note.str();
        }
        if (compilation.compiled) {
            const CompiledTask &compiled = *compilation.compiled;
            outcome.has_block_checks = true;
            outcome.atomicity = plan_partitions(compiled, solved.plan);
            outcome.valley_shape = valley_shape_holds(compiled, solved.plan);
            outcome.restore_fidelity = false;
            if (outcome.atomicity) {
                try {
                    Plan restored = restore_plan(task, compiled, solved.plan);
                    PlanReport replay = validate_plan(task, restored);
                    outcome.restore_fidelity =
                        replay.final_utility == solved.utility &&
                        replay.cost == solved.cost;
                } catch (const TaskError &error) {
                    outcome.note = error.what();
                }
            }
        }
        outcome.bfbb_match =
            bfbb_solve(compilation.task).utility == original.utility;
        report.outcomes.push_back(move(outcome));
    }
    return report;
}

string equivalence_csv_header() {
    return "task,seed,strategy,orig_utility,orig_cost,utility,cost,"
           "value_equal,cost_equal,atomicity,restore,valley,bfbb_match,"
           "gaining_prefix\n";
}

string equivalence_csv_rows(const EquivalenceReport &report) {
    ostringstream out;
    for (const StrategyOutcome &outcome : report.outcomes) {
        out << report.task_name << "," << report.seed << ","
            << strategy_name(outcome.strategy) << "," << report.original_utility
            << "," << report.original_cost << "," << outcome.utility << ","
            << outcome.cost << "," << mark(outcome.value_equal) << ","
            << mark(outcome.cost_equal) << ",";
        if (outcome.has_block_checks) {
            out << mark(outcome.atomicity) << ","
                << mark(outcome.restore_fidelity) << ","
                << mark(outcome.valley_shape) << ",";
        } else {
            out << "-,-,-,";
        }
        out << mark(outcome.bfbb_match) << ",";
        if (report.gaining_prefix_checked)
            out << mark(report.gaining_prefix_ok);
        else
            out << "-";
        out << "\n";
    }
    return out.str();
}

VerifySummary run_verify(const VerifyConfig &config) {
    VerifySummary summary;
    ostringstream csv;
    csv << equivalence_csv_header();
    for (uint64_t seed = config.seed_begin; seed <= config.seed_end; ++seed) {
        GenParams params = config.gen;
        params.seed = seed;
        OspTask task = generate_task(params);
        EquivalenceReport report = check_equivalence(
            task, config.strategies, config.caps, config.options,
            "gen-" + to_string(seed));
        report.seed = seed;
        ++summary.tasks;
        if (!report.all_pass())
            ++summary.failures;
        csv << equivalence_csv_rows(report);
        summary.reports.push_back(move(report));
    }
    summary.csv = csv.str();
    return summary;
}

} // namespace osp
