#ifndef OSP_EQUIVALENCE_H
#define OSP_EQUIVALENCE_H

#include "osp/io.h"
#include "osp/oracle.h"
#include "osp/unit_effect.h"

#include <cstdint>
#include <string>
#include <vector>

namespace osp {

/*
  Theorem check: a plan that improves on the initial state has a prefix that
  is at least as valuable as the whole plan and ends in an action with
  positive state-relative net utility.
*/
bool gaining_prefix_holds(const OspTask &task, const Plan &plan);

/*
  Lemma check: within each block the running utility is non-increasing until
  the first plus action and non-decreasing afterwards, and never exceeds the
  larger of the block-entry and block-exit utilities.
*/
bool valley_shape_holds(const CompiledTask &compiled, const Plan &plan);

struct StrategyOutcome {
    Strategy strategy = Strategy::base;
    int utility = 0;
    int cost = 0;
    bool value_equal = false;
    bool cost_equal = false;
    bool has_block_checks = false; // only unit-effect compilations have blocks
    bool atomicity = true;
    bool restore_fidelity = true;
    bool valley_shape = true;
    bool bfbb_match = false;
    std::string note; // counterexample description on failure

    bool pass() const {
        return value_equal && cost_equal && atomicity && restore_fidelity &&
               valley_shape && bfbb_match;
    }
};

struct EquivalenceReport {
    std::string task_name;
    uint64_t seed = 0;
    int original_utility = 0;
    int original_cost = 0;
    bool original_bfbb_match = false;
    bool gaining_prefix_checked = false;
    bool gaining_prefix_ok = true;
    std::vector<StrategyOutcome> outcomes;

    bool all_pass() const;
};

/*
  Solves the task and each strategy's compilation exhaustively, asserting
  exact utility and cost equality, block atomicity, restore fidelity, valley
  shape, the gaining-prefix property and oracle/BFBB agreement. Failures are
  report verdicts, not exceptions; CapExceededError propagates.
*/
EquivalenceReport check_equivalence(
    const OspTask &task, const std::vector<Strategy> &strategies,
    const OracleCaps &caps = {}, const CompileOptions &options = {},
    const std::string &task_name = "task");

std::string equivalence_csv_header();
std::string equivalence_csv_rows(const EquivalenceReport &report);

struct VerifyConfig {
    uint64_t seed_begin = 1;
    uint64_t seed_end = 50;
    GenParams gen; // seed is overridden per task
    std::vector<Strategy> strategies = {
        Strategy::base, Strategy::blind, Strategy::pretotal, Strategy::unit_all};
    OracleCaps caps;
    CompileOptions options;
};

struct VerifySummary {
    int tasks = 0;
    int failures = 0;
    std::string csv;
    std::vector<EquivalenceReport> reports;
};

// Equivalence run over generated tasks for seeds in [seed_begin, seed_end].
VerifySummary run_verify(const VerifyConfig &config);

} // namespace osp

#endif
