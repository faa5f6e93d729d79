#ifndef OSP_UNIT_EFFECT_H
#define OSP_UNIT_EFFECT_H

#include "osp/selective.h"
#include "osp/task.h"

#include <optional>
#include <string>
#include <vector>

namespace osp {

enum class Strategy {
    none,     // no compilation
    base,     // selective split only
    blind,    // unit-effect compilation of every ambiguous action
    pretotal, // unit-effect iff expected instances exceed precondition total
    unit_all, // unit-effect compilation of every action
};

std::string strategy_name(Strategy strategy);
std::optional<Strategy> strategy_from_name(const std::string &name);

struct StrategyFilter {
    Strategy strategy = Strategy::base;
    std::vector<int> selected; // indices of actions to unit-effect-compile
};

enum class LedgerKind {
    unlock,
    lock,
    verify,
    verify_no,
    plus,
    passthrough,
};

std::string ledger_kind_name(LedgerKind kind);

struct LedgerEntry {
    std::string compiled_name;
    std::string original_name;
    LedgerKind kind;
    int original_index;
    // For verify/verify_no/plus: the effect variable and the origin value the
    // action is built for.
    int var = -1;
    int origin = -1;
};

struct CompiledTask {
    OspTask task;
    std::vector<LedgerEntry> ledger; // parallel to task.actions
    int num_original_variables = 0;
    int unlock_var = -1;
    int noop_value = 0;
    // Per original action: [begin, end) range of its compiled actions.
    std::vector<std::pair<int, int>> action_range;
    // Original fact -> flag variable index, or -1.
    std::vector<std::vector<int>> flag_var;

    bool is_closed(const State &state) const {
        return state[unlock_var] == noop_value;
    }
};

// The expanding function: embeds an original state into the compiled state
// space (unlock=noOP, all flags 0). Injective and utility-preserving.
State expand_state(const CompiledTask &compiled, const State &original_state);

/*
  base -> empty filter (selective split applies as-is); blind -> all ambiguous
  actions; pretotal -> all ambiguous actions iff the summed expected instance
  counts exceed the summed precondition-entry counts, else none; unit_all ->
  every action.
*/
StrategyFilter choose_strategy(
    const OspTask &task, const std::vector<SplitReport> &reports,
    Strategy strategy);

/*
  Replaces each selected action o by: o_unlock carrying c(o); per effect fact
  (v,e) and origin p, a zero-cost verify action when u(e)-u(p) <= 0, else a
  zero-cost verifyNo/plus pair; and a zero-cost o_lock requiring eff(o),
  unlock=o and all effect flags. Unselected actions pass through with the
  added precondition unlock=noOP.
*/
CompiledTask unit_effect_compile(
    const OspTask &task, const StrategyFilter &filter,
    const CompileOptions &options = {});

/*
  Partitions the plan into unlock..lock blocks plus passthrough singletons and
  emits one original action per block. Throws MalformedPlanError when the
  plan does not partition.
*/
Plan restore_plan(
    const OspTask &original, const CompiledTask &compiled, const Plan &plan);

// True iff the plan partitions into complete atomic blocks and passthroughs.
bool plan_partitions(const CompiledTask &compiled, const Plan &plan);

/*
  The block simulating one application of an original action from the given
  original state: unlock, verifies, verifyNos, pluses (each phase in variable
  order), lock. Throws NotApplicableError when some origin value has no
  compiled action (possible under OriginPolicy::refined).
*/
Plan canonical_block(
    const CompiledTask &compiled, const OspTask &original, int action_index,
    const State &original_state);

// One row per compiled action: compiled_name,original_name,kind
std::string ledger_csv(const CompiledTask &compiled);

struct CompilationResult {
    OspTask task; // the task to solve
    std::vector<SplitReport> reports;
    StrategyFilter filter;
    std::optional<CompiledTask> compiled; // engaged iff unit-effect ran
};

/*
  Full offline pipeline: precondition completion, classification, then either
  selective splitting or unit-effect compilation of the chosen actions. With
  blind/pretotal and nothing selected the result equals the base compilation.
*/
CompilationResult compile_for_strategy(
    const OspTask &task, Strategy strategy, const CompileOptions &options = {});

} // namespace osp

#endif
