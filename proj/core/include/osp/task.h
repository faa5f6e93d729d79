#ifndef OSP_TASK_H
#define OSP_TASK_H

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace osp {

struct FactPair {
    int var;
    int value;

    auto operator<=>(const FactPair &) const = default;
};

struct Variable {
    std::string name;
    std::vector<std::string> value_names;
    std::vector<int> utilities; // one entry per domain value

    int domain_size() const {
        return static_cast<int>(value_names.size());
    }
};

// A state assigns one domain index per variable, in declaration order.
using State = std::vector<int>;

// A plan is a sequence of indices into OspTask::actions.
using Plan = std::vector<int>;

struct Action {
    std::string name;
    std::vector<FactPair> pre; // sorted by variable, at most one entry per variable
    std::vector<FactPair> eff; // sorted by variable, nonempty, disjoint from pre entries
    int cost = 0;

    // Returns the precondition value for var, or -1 if unconstrained.
    int pre_value(int var) const;
    int eff_value(int var) const;
};

struct BudgetSpec {
    bool is_fraction = false;
    int amount = 0;      // absolute form
    int numerator = 0;   // fraction form: ceil(numerator * cstar / denominator)
    int denominator = 1;
    int cstar = 0;

    int resolve() const;
};

struct OspTask {
    std::vector<Variable> variables;
    State initial;
    std::vector<Action> actions;
    std::vector<std::vector<FactPair>> mutex_groups; // facts in a group are pairwise exclusive
    BudgetSpec budget_spec;
    int budget = 0; // resolved from budget_spec

    int num_variables() const {
        return static_cast<int>(variables.size());
    }
    int num_actions() const {
        return static_cast<int>(actions.size());
    }
    int utility_of(FactPair fact) const {
        return variables[fact.var].utilities[fact.value];
    }
    int find_variable(const std::string &name) const;   // -1 if absent
    int find_action(const std::string &name) const;     // -1 if absent
    int find_value(int var, const std::string &name) const;
};

struct TaskError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotApplicableError : TaskError {
    using TaskError::TaskError;
};

struct IncompletePreconditionError : TaskError {
    using TaskError::TaskError;
};

struct NotApplicableAtStepError : TaskError {
    int step;
    NotApplicableAtStepError(int step, const std::string &msg)
        : TaskError(msg), step(step) {
    }
};

struct BudgetExceededError : TaskError {
    int cost;
    int budget;
    BudgetExceededError(int cost, int budget, const std::string &msg)
        : TaskError(msg), cost(cost), budget(budget) {
    }
};

struct NotClassicalError : TaskError {
    using TaskError::TaskError;
};

struct InstanceExplosionError : TaskError {
    long product;
    InstanceExplosionError(long product, const std::string &msg)
        : TaskError(msg), product(product) {
    }
};

struct MalformedPlanError : TaskError {
    using TaskError::TaskError;
};

struct CapExceededError : TaskError {
    long states_visited;
    CapExceededError(long states_visited, const std::string &msg)
        : TaskError(msg), states_visited(states_visited) {
    }
};

bool applicable(const OspTask &task, const State &state, const Action &action);

// Precondition check plus effect overwrite; throws NotApplicableError.
State apply(const OspTask &task, const State &state, const Action &action);

int state_utility(const OspTask &task, const State &state);

/*
  Net utility of an action over its effect variables, using the precondition
  values as the origin. Requires a precondition entry for every effect
  variable; otherwise the value is ambiguous and IncompletePreconditionError
  is thrown (callers that need a value use net_utility_in_state or
  net_utility_interval instead).
*/
int net_utility_static(const OspTask &task, const Action &action);

// Net utility relative to the values held in the given application state.
int net_utility_in_state(
    const OspTask &task, const State &state, const Action &action);

struct UtilityInterval {
    int floor;
    int ceiling;
};

/*
  Range of net_utility_in_state over all mutex-consistent states in which the
  action is applicable, computed per variable: effect variables with a
  precondition entry contribute a constant, unconstrained effect variables
  contribute u(eff) minus the max/min utility over their domain values that
  are not mutex with the known preconditions.
*/
UtilityInterval net_utility_interval(const OspTask &task, const Action &action);

struct PlanReport {
    int cost = 0;
    State final_state;
    int final_utility = 0;
    std::vector<int> utility_trace; // state utility after each step
};

/*
  Replays the plan from the initial state; throws NotApplicableAtStepError or
  BudgetExceededError.
*/
PlanReport validate_plan(const OspTask &task, const Plan &plan);

// True iff the two facts cannot hold together: same variable with different
// values, or both members of a declared mutex group.
bool facts_mutex(const OspTask &task, FactPair a, FactPair b);

// True iff fact is mutex with some fact of the partial assignment.
bool fact_conflicts_with(
    const OspTask &task, FactPair fact, const std::vector<FactPair> &partial);

// True iff the state violates no declared mutex group.
bool state_mutex_consistent(const OspTask &task, const State &state);

// Calls fn for every complete assignment consistent with the declared mutex
// groups. Intended for exhaustive checks on small tasks.
void for_each_mutex_consistent_state(
    const OspTask &task, const std::function<void(const State &)> &fn);

// Structural equality including names, ordering and the budget spec.
bool tasks_equal(const OspTask &a, const OspTask &b);

struct StateHash {
    size_t operator()(const State &state) const;
};

} // namespace osp

#endif
