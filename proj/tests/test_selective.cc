#include "osp/io.h"
#include "osp/oracle.h"
#include "osp/selective.h"

#include "test_tasks.h"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace std;
using namespace osp;
using namespace osp::tests;

namespace {

// All (state, successor) transitions of an action over the mutex-consistent
// states, for semantics-preservation checks.
set<pair<State, State>> transitions(const OspTask &task, const Action &action) {
    set<pair<State, State>> result;
    for_each_mutex_consistent_state(task, [&](const State &state) {
        if (applicable(task, state, action))
            result.insert({state, apply(task, state, action)});
    });
    return result;
}

CompileOptions refined_options() {
    CompileOptions options;
    options.origin_policy = OriginPolicy::refined;
    return options;
}

} // namespace

TEST_CASE("precondition completion adds mutex-forced entries") {
    // The mutex groups leave q=c as the only origin compatible with the
    // known precondition p=x, so the q entry can be added.
    OspTask task = parse_task(
        "osp-sas 1\nvars 2\nvar p 2\nval x 0\nval y 0\n"
        "var q 3\nval c 1\nval d 2\nval e 0\n"
        "mutex 2 p=x q=d\nmutex 2 p=x q=e\n"
        "init p=x q=c\nbudget 1\nactions 1\n"
        "action o cost 1\npre 1 p=x\neff 2 p=y q=e\n");
    OspTask completed = complete_preconditions(task);
    CHECK(completed.actions[0].pre ==
          vector<FactPair>{{0, 0}, {1, 0}});
    CHECK(transitions(task, task.actions[0]) ==
          transitions(completed, completed.actions[0]));

    OspTask truck = truck_task();
    OspTask truck_completed = complete_preconditions(truck);
    // Nothing forces a unique truck location, so the action is unchanged.
    CHECK(truck_completed.actions[0].pre == truck.actions[0].pre);

    OspTask no_mutex = truck;
    no_mutex.mutex_groups.clear();
    CHECK(tasks_equal(complete_preconditions(no_mutex), no_mutex));
}

TEST_CASE("explicit net utility sums preconditioned effect variables") {
    OspTask truck = truck_task();
    CHECK(explicit_net_utility(truck, truck.actions[0]) == -1);

    OspTask t1 = t1_task();
    CHECK(explicit_net_utility(t1, t1.actions[0]) ==
          net_utility_static(t1, t1.actions[0]));

    Action unconstrained;
    unconstrained.name = "free";
    unconstrained.eff = {{0, 4}};
    CHECK(explicit_net_utility(truck, unconstrained) == 0);
}

TEST_CASE("refined domain removes equal-utility and mutex values") {
    OspTask truck = truck_task();
    vector<int> values = refined_domain(truck, truck.actions[0], 0);
    CHECK(values == vector<int>{0, 1, 2}); // A, B, C: D is mutex, E ties

    // Every value ties the effect utility: nothing is ambiguous.
    OspTask flat = parse_task(
        "osp-sas 1\nvars 1\nvar v 3\nval a 1\nval b 1\nval c 1\ninit v=a\n"
        "budget 1\nactions 1\naction o cost 1\npre 0\neff 1 v=c\n");
    CHECK(refined_domain(flat, flat.actions[0], 0).empty());

    OspTask binary = parse_task(
        "osp-sas 1\nvars 1\nvar v 2\nval a 0\nval b 2\ninit v=a\n"
        "budget 1\nactions 1\naction o cost 1\npre 0\neff 1 v=b\n");
    CHECK(refined_domain(binary, binary.actions[0], 0) == vector<int>{0});
}

TEST_CASE("min split set contains exactly the refinable variables") {
    OspTask truck = truck_task();
    CHECK(min_split_set(truck, truck.actions[0]) == vector<int>{0});

    OspTask t1 = t1_task();
    CHECK(min_split_set(t1, t1.actions[0]).empty());

    OspTask flat = parse_task(
        "osp-sas 1\nvars 1\nvar v 3\nval a 1\nval b 1\nval c 1\ninit v=a\n"
        "budget 1\nactions 1\naction o cost 1\npre 0\neff 1 v=c\n");
    CHECK(min_split_set(flat, flat.actions[0]).empty());
}

TEST_CASE("classification marks by the interval sign") {
    OspTask truck = truck_task();
    SplitReport report = classify_action(truck, 0);
    CHECK(report.enu == -1);
    CHECK(report.floor == -1);
    CHECK(report.ceiling == 1);
    CHECK(report.verdict == Verdict::ambiguous);

    OspTask t1 = t1_task();
    SplitReport pure = classify_action(t1, 0);
    CHECK(pure.floor == 2);
    CHECK(pure.ceiling == 2);
    CHECK(pure.verdict == Verdict::pure_positive);

    // Effect utility below every origin utility on the only effect variable.
    OspTask drop = parse_task(
        "osp-sas 1\nvars 1\nvar v 3\nval a 2\nval b 1\nval c 0\ninit v=a\n"
        "budget 1\nactions 1\naction o cost 1\npre 0\neff 1 v=c\n");
    CHECK(classify_action(drop, 0).verdict == Verdict::non_positive);
}

TEST_CASE("ambiguous instances match the state-relative definition") {
    OspTask truck = truck_task();
    SplitReport report = classify_action(truck, 0);
    REQUIRE(report.instances.size() == 3);
    for (const SplitInstance &instance : report.instances) {
        // Build the application state the instance stands for and compare.
        State state = truck.initial;
        for (const FactPair &fact : truck.actions[0].pre)
            state[fact.var] = fact.value;
        for (const FactPair &origin : instance.assignment)
            state[origin.var] = origin.value;
        CHECK(instance.net_utility ==
              net_utility_in_state(truck, state, truck.actions[0]));
        CHECK(instance.net_utility == 1);
        CHECK(instance.positive);
    }
    CHECK(report.floor <= 0);
    for (const SplitInstance &instance : report.instances) {
        CHECK(instance.net_utility >= report.floor);
        CHECK(instance.net_utility <= report.ceiling);
    }
}

TEST_CASE("instance cap defers huge products") {
    ostringstream text;
    text << "osp-sas 1\nvars 4\n";
    for (int var = 0; var < 4; ++var) {
        text << "var v" << var << " 4\n";
        for (int value = 0; value < 4; ++value)
            text << "val d" << value << " " << value << "\n";
    }
    text << "init v0=d0 v1=d0 v2=d0 v3=d0\nbudget 1\nactions 1\n"
         << "action o cost 1\npre 0\neff 4 v0=d1 v1=d1 v2=d1 v3=d1\n";
    OspTask wide = parse_task(text.str());
    CompileOptions tight;
    tight.instance_cap = 8;
    SplitReport report = classify_action(wide, 0, tight);
    CHECK(report.verdict == Verdict::ambiguous_uncompiled);

    tight.cap_fallback = false;
    CHECK_THROWS_AS(classify_action(wide, 0, tight), InstanceExplosionError);
}

TEST_CASE("selective split replaces the truck drive by three instances") {
    OspTask truck = truck_task();
    SplitResult split = selective_split(truck, refined_options());
    int count = 0;
    for (const Action &action : split.task.actions) {
        if (action.name.rfind("drive_E2@", 0) == 0) {
            ++count;
            CHECK(net_utility_static(split.task, action) == 1);
        }
    }
    CHECK(count == 3);

    // Under the covering policy the zero-net origin t=E is kept as well.
    SplitResult covering = selective_split(truck);
    int covering_count = 0;
    for (const Action &action : covering.task.actions)
        if (action.name.rfind("drive_E2@", 0) == 0)
            ++covering_count;
    CHECK(covering_count == 4);
}

TEST_CASE("fully preconditioned tasks split to themselves") {
    GenParams params;
    params.incomplete_pre_probability = 0.0;
    params.seed = 3;
    OspTask task = generate_task(params);
    SplitResult split = selective_split(task);
    CHECK(tasks_equal(split.task, task));
    for (const SplitReport &report : split.reports)
        CHECK(report.verdict != Verdict::ambiguous);
}

TEST_CASE("splitting is idempotent") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        SplitResult once = selective_split(task);
        SplitResult twice = selective_split(once.task);
        for (const SplitReport &report : twice.reports)
            CHECK(report.verdict != Verdict::ambiguous);
        CHECK(tasks_equal(twice.task, once.task));
    }
}

TEST_CASE("marking is sound under exhaustive enumeration") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        for (int i = 0; i < task.num_actions(); ++i) {
            SplitReport report = classify_action(task, i);
            for_each_mutex_consistent_state(task, [&](const State &state) {
                if (!applicable(task, state, task.actions[i]))
                    return;
                int net = net_utility_in_state(task, state, task.actions[i]);
                if (report.verdict == Verdict::pure_positive)
                    CHECK(net > 0);
                if (report.verdict == Verdict::non_positive)
                    CHECK(net <= 0);
            });
        }
    }
}

TEST_CASE("splitting preserves the oracle optimum") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams params;
        params.seed = seed;
        OspTask task = generate_task(params);
        Solution original = brute_force_optimal(task);
        Solution split = brute_force_optimal(selective_split(task).task);
        CHECK(original.utility == split.utility);
        CHECK(original.cost == split.cost);
    }
}
