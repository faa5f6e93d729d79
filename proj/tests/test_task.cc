#include "osp/io.h"
#include "osp/task.h"

#include "test_tasks.h"

#include <doctest.h>

#include <algorithm>
#include <limits>

using namespace std;
using namespace osp;
using namespace osp::tests;

namespace {

// Independent route for the interval: enumerate every mutex-consistent state
// in which the action applies and take min/max of the state-relative net.
UtilityInterval interval_by_enumeration(const OspTask &task, const Action &action) {
    int lo = numeric_limits<int>::max();
    int hi = numeric_limits<int>::min();
    for_each_mutex_consistent_state(task, [&](const State &state) {
        if (!applicable(task, state, action))
            return;
        int net = net_utility_in_state(task, state, action);
        lo = min(lo, net);
        hi = max(hi, net);
    });
    if (lo > hi)
        return {0, 0};
    return {lo, hi};
}

} // namespace

TEST_CASE("applicable matches precondition entries") {
    OspTask truck = truck_task();
    const Action &drive = truck.actions[truck.find_action("drive_E2")];
    CHECK(applicable(truck, truck_state(truck, "A", "3"), drive));
    CHECK_FALSE(applicable(truck, truck_state(truck, "A", "2"), drive));

    Action empty_pre;
    empty_pre.name = "free";
    empty_pre.eff = {{0, 0}};
    CHECK(applicable(truck, truck_state(truck, "D", "0"), empty_pre));
}

TEST_CASE("apply overwrites effect entries") {
    OspTask truck = truck_task();
    const Action &drive = truck.actions[truck.find_action("drive_E2")];
    CHECK(apply(truck, truck_state(truck, "A", "3"), drive) ==
          truck_state(truck, "E", "2"));
    CHECK_THROWS_AS(apply(truck, truck_state(truck, "A", "2"), drive),
                    NotApplicableError);

    OspTask t1 = t1_task();
    State b = apply(t1, t1.initial, t1.actions[0]);
    CHECK(b == State{1});
    // Effects already holding leave the state unchanged.
    Action reassert;
    reassert.name = "reassert";
    reassert.eff = {{0, 1}};
    CHECK(apply(t1, b, reassert) == b);
}

TEST_CASE("state utility is the additive fact sum") {
    OspTask truck = truck_task();
    CHECK(state_utility(truck, truck_state(truck, "A", "3")) == 3);
    CHECK(state_utility(truck, truck_state(truck, "E", "2")) == 4);

    OspTask zero = truck;
    for (Variable &variable : zero.variables)
        fill(variable.utilities.begin(), variable.utilities.end(), 0);
    CHECK(state_utility(zero, truck_state(truck, "E", "2")) == 0);
}

TEST_CASE("static net utility needs complete effect preconditions") {
    OspTask truck = truck_task();
    const Action &drive = truck.actions[truck.find_action("drive_E2")];
    CHECK_THROWS_AS(net_utility_static(truck, drive), IncompletePreconditionError);

    Action fuel_only = drive;
    fuel_only.eff = {{1, 2}}; // keep only the fuel effect, pre f=3 covers it
    CHECK(net_utility_static(truck, fuel_only) == -1);

    OspTask t1 = t1_task();
    CHECK(net_utility_static(t1, t1.actions[0]) == 2);
}

TEST_CASE("state-relative net utility") {
    OspTask truck = truck_task();
    const Action &drive = truck.actions[truck.find_action("drive_E2")];
    CHECK(net_utility_in_state(truck, truck_state(truck, "A", "3"), drive) == 1);
    CHECK(net_utility_in_state(truck, truck_state(truck, "E", "3"), drive) == -1);
    CHECK_THROWS_AS(
        net_utility_in_state(truck, truck_state(truck, "A", "2"), drive),
        NotApplicableError);
}

TEST_CASE("net utility interval matches exhaustive enumeration") {
    OspTask truck = truck_task();
    const Action &drive = truck.actions[truck.find_action("drive_E2")];
    UtilityInterval interval = net_utility_interval(truck, drive);
    CHECK(interval.floor == -1);
    CHECK(interval.ceiling == 1);
    UtilityInterval expected = interval_by_enumeration(truck, drive);
    CHECK(interval.floor == expected.floor);
    CHECK(interval.ceiling == expected.ceiling);

    OspTask t1 = t1_task();
    UtilityInterval degenerate = net_utility_interval(t1, t1.actions[0]);
    CHECK(degenerate.floor == 2);
    CHECK(degenerate.ceiling == 2);
    CHECK(degenerate.floor == net_utility_static(t1, t1.actions[0]));
}

TEST_CASE("interval bounds are tight on random tasks") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        for (const Action &action : task.actions) {
            UtilityInterval interval = net_utility_interval(task, action);
            UtilityInterval expected = interval_by_enumeration(task, action);
            CHECK(interval.floor == expected.floor);
            CHECK(interval.ceiling == expected.ceiling);
        }
    }
}

TEST_CASE("state-relative net utility equals the utility difference") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        for_each_mutex_consistent_state(task, [&](const State &state) {
            for (const Action &action : task.actions) {
                if (!applicable(task, state, action))
                    continue;
                State next = apply(task, state, action);
                CHECK(net_utility_in_state(task, state, action) ==
                      state_utility(task, next) - state_utility(task, state));
            }
        });
    }
}

TEST_CASE("static and state-relative definitions agree on complete actions") {
    GenParams params;
    params.incomplete_pre_probability = 0.0;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        params.seed = seed;
        OspTask task = generate_task(params);
        for (const Action &action : task.actions) {
            int expected = net_utility_static(task, action);
            for_each_mutex_consistent_state(task, [&](const State &state) {
                if (applicable(task, state, action))
                    CHECK(net_utility_in_state(task, state, action) == expected);
            });
        }
    }
}

TEST_CASE("plan validation replays the plan") {
    OspTask truck = truck_task();
    int drive = truck.find_action("drive_E2");
    PlanReport report = validate_plan(truck, {drive});
    CHECK(report.cost == 1);
    CHECK(report.final_utility == 4);
    CHECK(report.utility_trace == vector<int>{4});
    CHECK(report.final_state == truck_state(truck, "E", "2"));

    PlanReport empty = validate_plan(truck, {});
    CHECK(empty.cost == 0);
    CHECK(empty.final_utility == 3);

    CHECK_THROWS_AS(
        validate_plan(truck, {drive, truck.find_action("drive_E1")}),
        BudgetExceededError);
    CHECK_THROWS_AS(validate_plan(truck, {drive, drive}), NotApplicableAtStepError);
}
