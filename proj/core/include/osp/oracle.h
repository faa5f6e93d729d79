#ifndef OSP_ORACLE_H
#define OSP_ORACLE_H

#include "osp/bfbb.h"
#include "osp/task.h"

#include <functional>

namespace osp {

struct OracleCaps {
    long max_states = 2000000;
    double max_ms = 0.0; // 0 = unlimited
};

using StatePredicate = std::function<bool(const State &)>;

/*
  Exhaustive lowest-cost-first enumeration of all states reachable within the
  budget, with dominance (a state closed at no higher cost dominates). Returns
  the exact maximum utility and, among maxima, a minimum-cost plan; among
  those, a plan whose final state satisfies `prefer` when one exists. Throws
  CapExceededError past the caps.
*/
Solution brute_force_optimal(
    const OspTask &task, const OracleCaps &caps = {},
    const StatePredicate &prefer = nullptr);

} // namespace osp

#endif
