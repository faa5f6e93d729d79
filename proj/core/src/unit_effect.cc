#include "osp/unit_effect.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

using namespace std;

namespace osp {

string strategy_name(Strategy strategy) {
    switch (strategy) {
    case Strategy::none:
        return "none";
    case Strategy::base:
        return "base";
    case Strategy::blind:
        return "blind";
    case Strategy::pretotal:
        return "pretotal";
    case Strategy::unit_all:
        return "unit-all";
    }
    return "?";
}

optional<Strategy> strategy_from_name(const string &name) {
    for (Strategy strategy :
         {Strategy::none, Strategy::base, Strategy::blind, Strategy::pretotal,
          Strategy::unit_all}) {
        if (strategy_name(strategy) == name)
            return strategy;
    }
    return nullopt;
}

string ledger_kind_name(LedgerKind kind) {
    switch (kind) {
    case LedgerKind::unlock:
        return "unlock";
    case LedgerKind::lock:
        return "lock";
    case LedgerKind::verify:
        return "verify";
    case LedgerKind::verify_no:
        return "verifyNo";
    case LedgerKind::plus:
        return "plus";
    case LedgerKind::passthrough:
        return "passthrough";
    }
    return "?";
}

State expand_state(const CompiledTask &compiled, const State &original_state) {
    assert(static_cast<int>(original_state.size()) ==
           compiled.num_original_variables);
    State state = original_state;
    state.resize(compiled.task.num_variables(), 0);
    state[compiled.unlock_var] = compiled.noop_value;
    return state;
}

StrategyFilter choose_strategy(
    const OspTask &task, const vector<SplitReport> &reports, Strategy strategy) {
    StrategyFilter filter;
    filter.strategy = strategy;
    switch (strategy) {
    case Strategy::none:
    case Strategy::base:
        break;
    case Strategy::blind:
        for (const SplitReport &report : reports) {
            if (report.verdict == Verdict::ambiguous ||
                report.verdict == Verdict::ambiguous_uncompiled)
                filter.selected.push_back(report.action_index);
        }
        break;
    case Strategy::pretotal: {
        long expected_instances = 0;
        long precondition_total = 0;
        vector<int> ambiguous;
        for (const SplitReport &report : reports) {
            if (report.verdict != Verdict::ambiguous &&
                report.verdict != Verdict::ambiguous_uncompiled)
                continue;
            ambiguous.push_back(report.action_index);
            long product = 1;
            for (int var : report.mss)
                product *= static_cast<long>(report.refined.at(var).size());
            expected_instances += product;
            precondition_total += static_cast<long>(
                task.actions[report.action_index].pre.size());
        }
        if (expected_instances > precondition_total)
            filter.selected = move(ambiguous);
        break;
    }
    case Strategy::unit_all:
        for (int i = 0; i < task.num_actions(); ++i)
            filter.selected.push_back(i);
        break;
    }
    return filter;
}

namespace {

string unique_name(set<string> &taken, string name) {
    while (taken.count(name))
        name += "~";
    taken.insert(name);
    return name;
}

} // namespace

CompiledTask unit_effect_compile(
    const OspTask &task, const StrategyFilter &filter,
    const CompileOptions &options) {
    CompiledTask compiled;
    compiled.num_original_variables = task.num_variables();
    OspTask &out = compiled.task;
    out.variables = task.variables;
    out.mutex_groups = task.mutex_groups;
    out.budget_spec = task.budget_spec;
    out.budget = task.budget;

    vector<bool> selected(task.num_actions(), false);
    for (int index : filter.selected)
        selected[index] = true;

    compiled.unlock_var = out.num_variables();
    {
        Variable unlock;
        unlock.name = "unlock";
        while (task.find_variable(unlock.name) != -1)
            unlock.name += "~";
        unlock.value_names.push_back("noOP");
        unlock.utilities.push_back(0);
        for (int i = 0; i < task.num_actions(); ++i) {
            if (selected[i]) {
                unlock.value_names.push_back(task.actions[i].name);
                unlock.utilities.push_back(0);
            }
        }
        out.variables.push_back(move(unlock));
    }
    compiled.noop_value = 0;
    vector<int> unlock_value(task.num_actions(), -1);
    {
        int next = 1;
        for (int i = 0; i < task.num_actions(); ++i) {
            if (selected[i])
                unlock_value[i] = next++;
        }
    }

    // Flag variables y for facts achievable inside a block. The literal mode
    // instantiates one per fact of every variable; the default instantiates
    // only facts occurring in some selected action's effect list (the rest
    // are never read or written).
    compiled.flag_var.resize(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var)
        compiled.flag_var[var].assign(task.variables[var].domain_size(), -1);
    {
        vector<FactPair> flagged;
        if (options.literal_flags) {
            for (int var = 0; var < task.num_variables(); ++var)
                for (int value = 0; value < task.variables[var].domain_size();
                     ++value)
                    flagged.push_back({var, value});
        } else {
            set<FactPair> facts;
            for (int i = 0; i < task.num_actions(); ++i) {
                if (!selected[i])
                    continue;
                for (const FactPair &fact : task.actions[i].eff)
                    facts.insert(fact);
            }
            flagged.assign(facts.begin(), facts.end());
        }
        for (const FactPair &fact : flagged) {
            Variable flag;
            flag.name = "y." + task.variables[fact.var].name + "." +
                        task.variables[fact.var].value_names[fact.value];
            while (out.find_variable(flag.name) != -1)
                flag.name += "~";
            flag.value_names = {"0", "1"};
            flag.utilities = {0, 0};
            compiled.flag_var[fact.var][fact.value] = out.num_variables();
            out.variables.push_back(move(flag));
        }
    }

    out.initial = task.initial;
    out.initial.resize(out.num_variables(), 0);
    out.initial[compiled.unlock_var] = compiled.noop_value;

    set<string> names;
    auto push_action = [&](Action action, LedgerEntry entry) {
        action.name = unique_name(names, move(action.name));
        entry.compiled_name = action.name;
        sort(action.pre.begin(), action.pre.end());
        sort(action.eff.begin(), action.eff.end());
        out.actions.push_back(move(action));
        compiled.ledger.push_back(move(entry));
    };

    compiled.action_range.resize(task.num_actions());
    for (int i = 0; i < task.num_actions(); ++i) {
        const Action &action = task.actions[i];
        int begin = out.num_actions();
        if (!selected[i]) {
            Action pass = action;
            pass.pre.push_back({compiled.unlock_var, compiled.noop_value});
            push_action(
                move(pass),
                {"", action.name, LedgerKind::passthrough, i});
            compiled.action_range[i] = {begin, out.num_actions()};
            continue;
        }

        vector<FactPair> flag_preconditions;
        for (const FactPair &fact : action.eff)
            flag_preconditions.push_back(
                {compiled.flag_var[fact.var][fact.value], 1});

        {
            Action unlock;
            unlock.name = action.name + ".unlock";
            unlock.pre = action.pre;
            unlock.pre.push_back({compiled.unlock_var, compiled.noop_value});
            unlock.eff = {{compiled.unlock_var, unlock_value[i]}};
            unlock.cost = action.cost;
            push_action(move(unlock), {"", action.name, LedgerKind::unlock, i});
        }

        // Verify actions: origins with nonpositive net change achieve the
        // effect and collect the flag.
        for (const FactPair &fact : action.eff) {
            const Variable &variable = task.variables[fact.var];
            int pre_value = action.pre_value(fact.var);
            vector<int> origins;
            if (pre_value != -1) {
                origins.push_back(pre_value);
            } else {
                for (int value = 0; value < variable.domain_size(); ++value) {
                    if (fact_conflicts_with(task, {fact.var, value}, action.pre))
                        continue;
                    if (options.origin_policy == OriginPolicy::refined &&
                        variable.utilities[value] == task.utility_of(fact))
                        continue;
                    origins.push_back(value);
                }
            }
            for (int origin : origins) {
                int delta = task.utility_of(fact) - variable.utilities[origin];
                if (delta > 0)
                    continue;
                Action verify;
                verify.name = action.name + ".verify." + variable.name + "." +
                              variable.value_names[origin];
                verify.pre = {{fact.var, origin},
                              {compiled.unlock_var, unlock_value[i]}};
                if (origin != fact.value)
                    verify.eff.push_back(fact);
                verify.eff.push_back(
                    {compiled.flag_var[fact.var][fact.value], 1});
                verify.cost = 0;
                push_action(
                    move(verify),
                    {"", action.name, LedgerKind::verify, i, fact.var, origin});
            }
        }

        // VerifyNo actions: origins with positive net change only collect the
        // flag; the effect itself is deferred to the plus action.
        for (int pass = 0; pass < 2; ++pass) {
            for (const FactPair &fact : action.eff) {
                const Variable &variable = task.variables[fact.var];
                int pre_value = action.pre_value(fact.var);
                vector<int> origins;
                if (pre_value != -1) {
                    origins.push_back(pre_value);
                } else {
                    for (int value = 0; value < variable.domain_size(); ++value) {
                        if (fact_conflicts_with(
                                task, {fact.var, value}, action.pre))
                            continue;
                        origins.push_back(value);
                    }
                }
                for (int origin : origins) {
                    int delta = task.utility_of(fact) - variable.utilities[origin];
                    if (delta <= 0)
                        continue;
                    if (pass == 0) {
                        Action verify_no;
                        verify_no.name = action.name + ".verifyno." +
                                         variable.name + "." +
                                         variable.value_names[origin];
                        verify_no.pre = {{fact.var, origin},
                                         {compiled.unlock_var, unlock_value[i]}};
                        verify_no.eff = {
                            {compiled.flag_var[fact.var][fact.value], 1}};
                        verify_no.cost = 0;
                        push_action(
                            move(verify_no),
                            {"", action.name, LedgerKind::verify_no, i,
                             fact.var, origin});
                    } else {
                        Action plus;
                        plus.name = action.name + ".plus." + variable.name +
                                    "." + variable.value_names[origin];
                        plus.pre = {{fact.var, origin},
                                    {compiled.unlock_var, unlock_value[i]}};
                        plus.pre.insert(
                            plus.pre.end(), flag_preconditions.begin(),
                            flag_preconditions.end());
                        plus.eff = {fact};
                        plus.cost = 0;
                        push_action(
                            move(plus),
                            {"", action.name, LedgerKind::plus, i, fact.var,
                             origin});
                    }
                }
            }
        }

        {
            Action lock;
            lock.name = action.name + ".lock";
            lock.pre = action.eff;
            lock.pre.push_back({compiled.unlock_var, unlock_value[i]});
            lock.pre.insert(
                lock.pre.end(), flag_preconditions.begin(),
                flag_preconditions.end());
            lock.eff = {{compiled.unlock_var, compiled.noop_value}};
            for (const FactPair &flag : flag_preconditions)
                lock.eff.push_back({flag.var, 0});
            lock.cost = 0;
            push_action(move(lock), {"", action.name, LedgerKind::lock, i});
        }
        compiled.action_range[i] = {begin, out.num_actions()};
    }
    return compiled;
}

Plan restore_plan(
    const OspTask &original, const CompiledTask &compiled, const Plan &plan) {
    Plan restored;
    size_t i = 0;
    while (i < plan.size()) {
        const LedgerEntry &entry = compiled.ledger[plan[i]];
        if (entry.kind == LedgerKind::passthrough) {
            restored.push_back(entry.original_index);
            ++i;
            continue;
        }
        if (entry.kind != LedgerKind::unlock)
            throw MalformedPlanError(
                "plan step " + to_string(i) + " (" + entry.compiled_name +
                ") does not start a block");
        int original_index = entry.original_index;
        ++i;
        while (i < plan.size()) {
            const LedgerEntry &inner = compiled.ledger[plan[i]];
            if (inner.original_index == original_index &&
                (inner.kind == LedgerKind::verify ||
                 inner.kind == LedgerKind::verify_no ||
                 inner.kind == LedgerKind::plus)) {
                ++i;
                continue;
            }
            break;
        }
        if (i >= plan.size() ||
            compiled.ledger[plan[i]].kind != LedgerKind::lock ||
            compiled.ledger[plan[i]].original_index != original_index)
            throw MalformedPlanError(
                "block of " + original.actions[original_index].name +
                " is not closed");
        ++i;
        restored.push_back(original_index);
    }
    return restored;
}

bool plan_partitions(const CompiledTask &compiled, const Plan &plan) {
    OspTask dummy;
    dummy.actions.resize(compiled.action_range.size());
    try {
        restore_plan(dummy, compiled, plan);
        return true;
    } catch (const MalformedPlanError &) {
        return false;
    }
}

Plan canonical_block(
    const CompiledTask &compiled, const OspTask &original, int action_index,
    const State &original_state) {
    const Action &action = original.actions[action_index];
    if (!applicable(original, original_state, action))
        throw NotApplicableError(
            "action " + action.name + " is not applicable");
    auto [begin, end] = compiled.action_range[action_index];
    auto find_kind = [&](LedgerKind kind, int var, int origin) {
        for (int i = begin; i < end; ++i) {
            const LedgerEntry &entry = compiled.ledger[i];
            if (entry.kind == kind && entry.var == var && entry.origin == origin)
                return i;
        }
        return -1;
    };
    Plan block;
    for (int i = begin; i < end; ++i) {
        if (compiled.ledger[i].kind == LedgerKind::unlock)
            block.push_back(i);
    }
    if (block.empty())
        throw NotApplicableError(
            "action " + action.name + " was not unit-effect-compiled");
    vector<int> verify_nos;
    vector<int> pluses;
    for (const FactPair &fact : action.eff) {
        int origin = original_state[fact.var];
        int delta = original.utility_of(fact) -
                    original.utility_of({fact.var, origin});
        if (delta <= 0) {
            int index = find_kind(LedgerKind::verify, fact.var, origin);
            if (index == -1)
                throw NotApplicableError(
                    "no verify action for " + action.name + " from origin " +
                    original.variables[fact.var].value_names[origin]);
            block.push_back(index);
        } else {
            int index = find_kind(LedgerKind::verify_no, fact.var, origin);
            int plus = find_kind(LedgerKind::plus, fact.var, origin);
            if (index == -1 || plus == -1)
                throw NotApplicableError(
                    "no verifyNo/plus pair for " + action.name +
                    " from origin " +
                    original.variables[fact.var].value_names[origin]);
            verify_nos.push_back(index);
            pluses.push_back(plus);
        }
    }
    block.insert(block.end(), verify_nos.begin(), verify_nos.end());
    block.insert(block.end(), pluses.begin(), pluses.end());
    for (int i = begin; i < end; ++i) {
        if (compiled.ledger[i].kind == LedgerKind::lock)
            block.push_back(i);
    }
    return block;
}

string ledger_csv(const CompiledTask &compiled) {
    ostringstream out;
    out << "compiled_name,original_name,kind\n";
    for (const LedgerEntry &entry : compiled.ledger)
        out << entry.compiled_name << "," << entry.original_name << ","
            << ledger_kind_name(entry.kind) << "\n";
    return out.str();
}

CompilationResult compile_for_strategy(
    const OspTask &task, Strategy strategy, const CompileOptions &options) {
    CompilationResult result;
    if (strategy == Strategy::none) {
        result.task = task;
        result.filter.strategy = strategy;
        return result;
    }
    OspTask completed = complete_preconditions(task);
    result.reports = classify_all(completed, options);
    result.filter = choose_strategy(completed, result.reports, strategy);
    if (result.filter.selected.empty()) {
        SplitResult split = selective_split(completed, result.reports, options);
        result.task = move(split.task);
        result.reports = move(split.reports);
    } else {
        result.compiled = unit_effect_compile(completed, result.filter, options);
        result.task = result.compiled->task;
    }
    return result;
}

} // namespace osp
