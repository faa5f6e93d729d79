#include "osp/task.h"

#include <algorithm>
#include <cassert>
#include <limits>

using namespace std;

namespace osp {

int Action::pre_value(int var) const {
    for (const FactPair &fact : pre) {
        if (fact.var == var)
            return fact.value;
    }
    return -1;
}

int Action::eff_value(int var) const {
    for (const FactPair &fact : eff) {
        if (fact.var == var)
            return fact.value;
    }
    return -1;
}

int BudgetSpec::resolve() const {
    if (!is_fraction)
        return amount;
    assert(denominator > 0);
    long num = static_cast<long>(numerator) * cstar;
    return static_cast<int>((num + denominator - 1) / denominator);
}

int OspTask::find_variable(const string &name) const {
    for (int i = 0; i < num_variables(); ++i) {
        if (variables[i].name == name)
            return i;
    }
    return -1;
}

int OspTask::find_action(const string &name) const {
    for (int i = 0; i < num_actions(); ++i) {
        if (actions[i].name == name)
            return i;
    }
    return -1;
}

int OspTask::find_value(int var, const string &name) const {
    const Variable &variable = variables[var];
    for (int i = 0; i < variable.domain_size(); ++i) {
        if (variable.value_names[i] == name)
            return i;
    }
    return -1;
}

bool applicable(const OspTask &, const State &state, const Action &action) {
    for (const FactPair &fact : action.pre) {
        if (state[fact.var] != fact.value)
            return false;
    }
    return true;
}

State apply(const OspTask &task, const State &state, const Action &action) {
    if (!applicable(task, state, action))
        throw NotApplicableError(
            "action " + action.name + " is not applicable");
    State result = state;
    for (const FactPair &fact : action.eff)
        result[fact.var] = fact.value;
    return result;
}

int state_utility(const OspTask &task, const State &state) {
    int total = 0;
    for (int var = 0; var < task.num_variables(); ++var)
        total += task.variables[var].utilities[state[var]];
    return total;
}

int net_utility_static(const OspTask &task, const Action &action) {
    int total = 0;
    for (const FactPair &fact : action.eff) {
        int pre_value = action.pre_value(fact.var);
        if (pre_value == -1)
            throw IncompletePreconditionError(
                "action " + action.name + " has no precondition on effect variable " +
                task.variables[fact.var].name);
        total += task.utility_of(fact) - task.utility_of({fact.var, pre_value});
    }
    return total;
}

int net_utility_in_state(
    const OspTask &task, const State &state, const Action &action) {
    if (!applicable(task, state, action))
        throw NotApplicableError(
            "action " + action.name + " is not applicable");
    int total = 0;
    for (const FactPair &fact : action.eff)
        total += task.utility_of(fact) - task.utility_of({fact.var, state[fact.var]});
    return total;
}

UtilityInterval net_utility_interval(const OspTask &task, const Action &action) {
    int floor = 0;
    int ceiling = 0;
    for (const FactPair &fact : action.eff) {
        int pre_value = action.pre_value(fact.var);
        if (pre_value != -1) {
            int delta = task.utility_of(fact) - task.utility_of({fact.var, pre_value});
            floor += delta;
            ceiling += delta;
            continue;
        }
        int max_origin = numeric_limits<int>::min();
        int min_origin = numeric_limits<int>::max();
        const Variable &variable = task.variables[fact.var];
        for (int value = 0; value < variable.domain_size(); ++value) {
            if (fact_conflicts_with(task, {fact.var, value}, action.pre))
                continue;
            max_origin = max(max_origin, variable.utilities[value]);
            min_origin = min(min_origin, variable.utilities[value]);
        }
        if (max_origin == numeric_limits<int>::min()) {
            // Every origin value is mutex with the preconditions: the action
            // is applicable in no mutex-consistent state.
            return {0, 0};
        }
        floor += task.utility_of(fact) - max_origin;
        ceiling += task.utility_of(fact) - min_origin;
    }
    return {floor, ceiling};
}

PlanReport validate_plan(const OspTask &task, const Plan &plan) {
    PlanReport report;
    report.final_state = task.initial;
    for (size_t i = 0; i < plan.size(); ++i) {
        const Action &action = task.actions[plan[i]];
        if (!applicable(task, report.final_state, action))
            throw NotApplicableAtStepError(
                static_cast<int>(i),
                "step " + to_string(i) + " (" + action.name + ") is not applicable");
        report.final_state = apply(task, report.final_state, action);
        report.cost += action.cost;
        report.utility_trace.push_back(state_utility(task, report.final_state));
    }
    if (report.cost > task.budget)
        throw BudgetExceededError(
            report.cost, task.budget,
            "plan cost " + to_string(report.cost) + " exceeds budget " +
            to_string(task.budget));
    report.final_utility = state_utility(task, report.final_state);
    return report;
}

bool facts_mutex(const OspTask &task, FactPair a, FactPair b) {
    if (a.var == b.var)
        return a.value != b.value;
    for (const vector<FactPair> &group : task.mutex_groups) {
        bool has_a = find(group.begin(), group.end(), a) != group.end();
        bool has_b = find(group.begin(), group.end(), b) != group.end();
        if (has_a && has_b)
            return true;
    }
    return false;
}

bool fact_conflicts_with(
    const OspTask &task, FactPair fact, const vector<FactPair> &partial) {
    for (const FactPair &known : partial) {
        if (known.var == fact.var)
            continue;
        if (facts_mutex(task, fact, known))
            return true;
    }
    return false;
}

bool state_mutex_consistent(const OspTask &task, const State &state) {
    for (const vector<FactPair> &group : task.mutex_groups) {
        int held = 0;
        for (const FactPair &fact : group) {
            if (state[fact.var] == fact.value)
                ++held;
        }
        if (held > 1)
            return false;
    }
    return true;
}

void for_each_mutex_consistent_state(
    const OspTask &task, const function<void(const State &)> &fn) {
    State state(task.num_variables(), 0);
    while (true) {
        if (state_mutex_consistent(task, state))
            fn(state);
        int var = task.num_variables() - 1;
        while (var >= 0) {
            if (++state[var] < task.variables[var].domain_size())
                break;
            state[var] = 0;
            --var;
        }
        if (var < 0)
            return;
    }
}

bool tasks_equal(const OspTask &a, const OspTask &b) {
    if (a.num_variables() != b.num_variables() ||
        a.num_actions() != b.num_actions() ||
        a.initial != b.initial ||
        a.mutex_groups != b.mutex_groups ||
        a.budget != b.budget ||
        a.budget_spec.is_fraction != b.budget_spec.is_fraction ||
        a.budget_spec.amount != b.budget_spec.amount ||
        a.budget_spec.numerator != b.budget_spec.numerator ||
        a.budget_spec.denominator != b.budget_spec.denominator ||
        a.budget_spec.cstar != b.budget_spec.cstar)
        return false;
    for (int i = 0; i < a.num_variables(); ++i) {
        if (a.variables[i].name != b.variables[i].name ||
            a.variables[i].value_names != b.variables[i].value_names ||
            a.variables[i].utilities != b.variables[i].utilities)
            return false;
    }
    for (int i = 0; i < a.num_actions(); ++i) {
        if (a.actions[i].name != b.actions[i].name ||
            a.actions[i].pre != b.actions[i].pre ||
            a.actions[i].eff != b.actions[i].eff ||
            a.actions[i].cost != b.actions[i].cost)
            return false;
    }
    return true;
}

size_t StateHash::operator()(const State &state) const {
    size_t hash = 0xcbf29ce484222325ULL;
    for (int value : state) {
        hash ^= static_cast<size_t>(value) + 0x9e3779b97f4a7c15ULL;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

} // namespace osp
