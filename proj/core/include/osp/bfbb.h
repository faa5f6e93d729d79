#ifndef OSP_BFBB_H
#define OSP_BFBB_H

#include "osp/task.h"

#include <functional>

namespace osp {

struct SearchStats {
    long expansions = 0;
    long generated = 0;
    long duplicate_hits = 0;
    double wall_time_ms = 0.0;
};

struct Solution {
    Plan plan;
    int utility = 0;
    int cost = 0;
    SearchStats stats;
};

struct SearchLimits {
    long max_expansions = 0; // 0 = unlimited
    double max_ms = 0.0;     // 0 = unlimited
};

// Admissible utility upper bound h(s, b): one heuristic call per node; must
// never under-bound the utility achievable from the state within the budget.
using Heuristic = std::function<int(const OspTask &, const State &, int)>;

using FinalStatePreference = std::function<bool(const State &)>;

// Sum over variables of the maximal fact utility; ignores the remaining
// budget, so it upper-bounds any reachable state's utility.
int heuristic_max_fact(
    const OspTask &task, const State &state, int remaining_budget);

/*
  Best-First-Branch-and-Bound: maximizes final-state utility over plans with
  cost <= budget. The incumbent starts as the empty plan; a node is pruned
  when its bound cannot strictly beat the incumbent or its cost exceeds the
  budget. Expansion order: max f, ties min g, then FIFO. Duplicate states are
  discarded when already closed at no higher cost. Throws CapExceededError
  when limits are hit.

  `prefer` extends the incumbent value lexicographically to
  (utility, prefer(state)): an equal-utility preferred state at no extra cost
  replaces an unpreferred incumbent, and equal-bound nodes stay open until the
  incumbent is preferred. Callers solving unit-effect compilations pass the
  block-closed test so reported plans end on complete blocks. Without it the
  rule reduces to pruning on f <= incumbent utility.
*/
Solution bfbb_solve(
    const OspTask &task, const Heuristic &heuristic = heuristic_max_fact,
    const SearchLimits &limits = {},
    const FinalStatePreference &prefer = nullptr);

} // namespace osp

#endif
