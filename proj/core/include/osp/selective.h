#ifndef OSP_SELECTIVE_H
#define OSP_SELECTIVE_H

#include "osp/task.h"

#include <map>
#include <string>
#include <vector>

namespace osp {

enum class Verdict {
    non_positive,
    pure_positive,
    ambiguous,
    // Instance enumeration exceeded the cap; left compact and deferred to
    // unit-effect compilation.
    ambiguous_uncompiled,
};

std::string verdict_name(Verdict verdict);

/*
  Origin values enumerated when an unconstrained effect variable is split or
  unit-effect-compiled:

  - refined: only values whose utility differs from the effect value's, minus
    values mutex with the known preconditions. This is the compact translation
    and reproduces the paper's worked example, but an application state whose
    origin value ties the effect utility has no instance and is lost.
  - covering: all values that are not mutex with the known preconditions.
    Zero-net origin values are kept, so every mutex-consistent application
    state of the original action stays simulatable and optimal utility and
    cost are preserved on every input.
*/
enum class OriginPolicy {
    refined,
    covering,
};

struct CompileOptions {
    OriginPolicy origin_policy = OriginPolicy::covering;
    int instance_cap = 512;
    // On cap overflow mark the action ambiguous_uncompiled instead of
    // throwing InstanceExplosionError.
    bool cap_fallback = true;
    // Unit-effect compilation: instantiate a flag for every fact of every
    // variable, as in the literal definition, instead of only for facts that
    // occur in some selected action's effect list.
    bool literal_flags = false;
};

struct SplitInstance {
    std::vector<FactPair> assignment; // one origin fact per split variable
    int net_utility;
    bool positive;
};

struct SplitReport {
    int action_index = -1;
    std::string action;
    int enu = 0;
    std::vector<int> mss;                     // min-split-set variables
    std::map<int, std::vector<int>> refined;  // unconstrained effect var -> refined values
    int floor = 0;
    int ceiling = 0;
    Verdict verdict = Verdict::non_positive;
    std::vector<SplitInstance> instances;     // enumerated for ambiguous actions
};

/*
  Mutex-based precondition completion: adds pre entries for effect variables
  whose origin is forced to a single value by the declared mutex groups.
  Transition-preserving.
*/
OspTask complete_preconditions(const OspTask &task);

// Net utility summed over effect variables that have a precondition entry;
// unconstrained effect variables contribute nothing.
int explicit_net_utility(const OspTask &task, const Action &action);

// For an unconstrained effect variable: domain values with utility different
// from the effect value's, excluding values mutex with known preconditions.
std::vector<int> refined_domain(const OspTask &task, const Action &action, int var);

// Unconstrained effect variables with nonempty refined domain.
std::vector<int> min_split_set(const OspTask &task, const Action &action);

SplitReport classify_action(
    const OspTask &task, int action_index, const CompileOptions &options = {});

std::vector<SplitReport> classify_all(
    const OspTask &task, const CompileOptions &options = {});

struct SplitResult {
    OspTask task;
    std::vector<SplitReport> reports;
};

/*
  Marked actions pass through unchanged; each ambiguous action is replaced by
  instances with completed preconditions over its split variables, labeled by
  their explicit net utility.
*/
SplitResult selective_split(const OspTask &task, const CompileOptions &options = {});

SplitResult selective_split(
    const OspTask &task, const std::vector<SplitReport> &reports,
    const CompileOptions &options = {});

// One row per action: action,enu,floor,ceiling,verdict,instance_count
std::string split_reports_csv(const std::vector<SplitReport> &reports);

} // namespace osp

#endif
