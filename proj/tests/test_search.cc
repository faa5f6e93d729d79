#include "osp/bfbb.h"
#include "osp/io.h"
#include "osp/oracle.h"
#include "osp/unit_effect.h"

#include "test_tasks.h"

#include <doctest.h>

#include <algorithm>

using namespace std;
using namespace osp;
using namespace osp::tests;

TEST_CASE("max-fact heuristic bounds every state") {
    OspTask truck = truck_task();
    CHECK(heuristic_max_fact(truck, truck.initial, truck.budget) == 5);
    CHECK(heuristic_max_fact(truck, truck.initial, 0) == 5);
    for_each_mutex_consistent_state(truck, [&](const State &state) {
        CHECK(heuristic_max_fact(truck, state, 0) >= state_utility(truck, state));
    });

    OspTask zero = truck;
    for (Variable &variable : zero.variables)
        fill(variable.utilities.begin(), variable.utilities.end(), 0);
    CHECK(heuristic_max_fact(zero, zero.initial, zero.budget) == 0);
}

TEST_CASE("bfbb solves the tiny tasks optimally") {
    OspTask t1 = t1_task(1);
    Solution solution = bfbb_solve(t1);
    CHECK(solution.utility == 2);
    CHECK(solution.plan == Plan{0});

    OspTask broke = t1_task(0);
    Solution empty = bfbb_solve(broke);
    CHECK(empty.utility == 0);
    CHECK(empty.plan.empty());

    OspTask truck = truck_task(1);
    Solution drive = bfbb_solve(truck);
    CHECK(drive.utility == 4);
    CHECK(drive.plan == Plan{truck.find_action("drive_E2")});
}

TEST_CASE("bfbb on the compiled truck restores the original plan") {
    OspTask truck = truck_task(1);
    CompilationResult result = compile_for_strategy(truck, Strategy::blind);
    REQUIRE(result.compiled);
    const CompiledTask &compiled = *result.compiled;
    Solution solution = bfbb_solve(
        result.task, heuristic_max_fact, {},
        [&](const State &state) { return compiled.is_closed(state); });
    CHECK(solution.utility == 4);
    Plan restored = restore_plan(truck, compiled, solution.plan);
    CHECK(restored == Plan{truck.find_action("drive_E2")});
}

TEST_CASE("every incumbent is a valid plan") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        Solution solution = bfbb_solve(task);
        PlanReport report = validate_plan(task, solution.plan);
        CHECK(report.final_utility == solution.utility);
        CHECK(report.cost == solution.cost);
        CHECK(report.cost <= task.budget);
    }
}

TEST_CASE("bfbb agrees with the oracle") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        CHECK(bfbb_solve(task).utility == brute_force_optimal(task).utility);
    }
}

TEST_CASE("oracle basics") {
    OspTask t1 = t1_task(1);
    Solution solution = brute_force_optimal(t1);
    CHECK(solution.utility == 2);
    CHECK(solution.cost == 1);

    OspTask broke = t1_task(0);
    Solution empty = brute_force_optimal(broke);
    CHECK(empty.utility == 0);
    CHECK(empty.plan.empty());

    OspTask truck = truck_task(3);
    CHECK(brute_force_optimal(truck).utility == bfbb_solve(truck).utility);
}

TEST_CASE("oracle is invariant under action reordering") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        Solution forward = brute_force_optimal(task);
        OspTask reversed = task;
        reverse(reversed.actions.begin(), reversed.actions.end());
        Solution backward = brute_force_optimal(reversed);
        CHECK(forward.utility == backward.utility);
        CHECK(forward.cost == backward.cost);
    }
}

TEST_CASE("oracle utility is monotone in the budget") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        int previous = 0;
        for (int budget = 0; budget <= task.budget; ++budget) {
            OspTask bounded = task;
            bounded.budget = budget;
            bounded.budget_spec.amount = budget;
            int utility = brute_force_optimal(bounded).utility;
            if (budget > 0)
                CHECK(utility >= previous);
            previous = utility;
        }
    }
}

TEST_CASE("caps abort oversized searches") {
    OspTask truck = truck_task(3);
    OracleCaps caps;
    caps.max_states = 1;
    CHECK_THROWS_AS(brute_force_optimal(truck, caps), CapExceededError);

    SearchLimits limits;
    limits.max_expansions = 1;
    CHECK_THROWS_AS(bfbb_solve(truck, heuristic_max_fact, limits),
                    CapExceededError);
}
