#include "osp/equivalence.h"
#include "osp/io.h"

#include "test_tasks.h"

#include <doctest.h>

using namespace std;
using namespace osp;
using namespace osp::tests;

TEST_CASE("the truck task passes every verdict") {
    OspTask truck = truck_task(2);
    EquivalenceReport report = check_equivalence(
        truck,
        {Strategy::base, Strategy::blind, Strategy::pretotal, Strategy::unit_all});
    CHECK(report.all_pass());
    CHECK(report.original_utility == 4);
    for (const StrategyOutcome &outcome : report.outcomes) {
        CHECK(outcome.utility == 4);
        CHECK(outcome.cost == report.original_cost);
    }
}

TEST_CASE("gaining-prefix check is vacuous without improvement") {
    // A single zero-net action: the optimum equals the initial utility.
    OspTask flat = parse_task(
        "osp-sas 1\nvars 1\nvar v 2\nval a 1\nval b 1\ninit v=a\nbudget 1\n"
        "actions 1\naction o cost 1\npre 1 v=a\neff 1 v=b\n");
    EquivalenceReport report = check_equivalence(flat, {Strategy::unit_all});
    CHECK_FALSE(report.gaining_prefix_checked);
    CHECK(report.all_pass());
}

TEST_CASE("gaining prefix holds on oracle plans") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        Solution solution = brute_force_optimal(task);
        if (solution.utility > state_utility(task, task.initial))
            CHECK(gaining_prefix_holds(task, solution.plan));
    }
}

TEST_CASE("equivalence holds on a seeded random suite") {
    VerifyConfig config;
    config.seed_begin = 1;
    config.seed_end = 25;
    VerifySummary summary = run_verify(config);
    CHECK(summary.tasks == 25);
    CHECK(summary.failures == 0);
}

TEST_CASE("verify CSV is deterministic") {
    VerifyConfig config;
    config.seed_begin = 1;
    config.seed_end = 5;
    CHECK(run_verify(config).csv == run_verify(config).csv);
}
