#include "osp/bfbb.h"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

using namespace std;

namespace osp {

int heuristic_max_fact(const OspTask &task, const State &, int) {
    int total = 0;
    for (const Variable &variable : task.variables)
        total += *max_element(variable.utilities.begin(), variable.utilities.end());
    return total;
}

namespace {

struct Node {
    State state;
    int g;
    int parent;
    int action;
};

struct OpenEntry {
    int f;
    int g;
    long seq;
    int node;

    bool operator<(const OpenEntry &other) const {
        // priority_queue keeps the largest on top: max f, then min g, FIFO.
        if (f != other.f)
            return f < other.f;
        if (g != other.g)
            return g > other.g;
        return seq > other.seq;
    }
};

Plan extract_plan(const vector<Node> &nodes, int index) {
    Plan plan;
    while (index > 0) {
        plan.push_back(nodes[index].action);
        index = nodes[index].parent;
    }
    reverse(plan.begin(), plan.end());
    return plan;
}

} // namespace

Solution bfbb_solve(
    const OspTask &task, const Heuristic &heuristic, const SearchLimits &limits,
    const FinalStatePreference &prefer) {
    auto start_time = chrono::steady_clock::now();
    Solution incumbent;
    incumbent.utility = state_utility(task, task.initial);
    incumbent.cost = 0;
    bool incumbent_preferred = !prefer || prefer(task.initial);
    // A node is prunable iff its bound cannot improve the incumbent's
    // (utility, preferred) pair.
    auto prunable = [&](int f) {
        return f < incumbent.utility ||
               (f == incumbent.utility && incumbent_preferred);
    };

    vector<Node> nodes;
    nodes.push_back({task.initial, 0, -1, -1});
    priority_queue<OpenEntry> open;
    long seq = 0;
    open.push({heuristic(task, task.initial, task.budget), 0, seq++, 0});
    unordered_map<State, int, StateHash> closed;

    while (!open.empty()) {
        OpenEntry entry = open.top();
        open.pop();
        if (prunable(entry.f))
            break; // no remaining node can beat the incumbent
        const State state = nodes[entry.node].state;
        int g = nodes[entry.node].g;
        auto closed_it = closed.find(state);
        if (closed_it != closed.end() && closed_it->second <= g) {
            ++incumbent.stats.duplicate_hits;
            continue;
        }
        closed[state] = g;
        ++incumbent.stats.expansions;
        if (limits.max_expansions > 0 &&
            incumbent.stats.expansions > limits.max_expansions)
            throw CapExceededError(
                incumbent.stats.expansions, "expansion cap exceeded");
        if (limits.max_ms > 0 && incumbent.stats.expansions % 1024 == 0) {
            double elapsed = chrono::duration<double, milli>(
                chrono::steady_clock::now() - start_time).count();
            if (elapsed > limits.max_ms)
                throw CapExceededError(
                    incumbent.stats.expansions, "time cap exceeded");
        }
        for (int action_index = 0; action_index < task.num_actions();
             ++action_index) {
            const Action &action = task.actions[action_index];
            if (!applicable(task, state, action))
                continue;
            int g2 = g + action.cost;
            if (g2 > task.budget)
                continue;
            State successor = apply(task, state, action);
            ++incumbent.stats.generated;
            auto seen = closed.find(successor);
            if (seen != closed.end() && seen->second <= g2) {
                ++incumbent.stats.duplicate_hits;
                continue;
            }
            int node = static_cast<int>(nodes.size());
            nodes.push_back({move(successor), g2, entry.node, action_index});
            int utility = state_utility(task, nodes[node].state);
            bool preferred = !prefer || prefer(nodes[node].state);
            if (utility > incumbent.utility ||
                (utility == incumbent.utility && preferred &&
                 !incumbent_preferred && g2 <= incumbent.cost)) {
                incumbent.utility = utility;
                incumbent.cost = g2;
                incumbent.plan = extract_plan(nodes, node);
                incumbent_preferred = preferred;
            }
            int f = heuristic(task, nodes[node].state, task.budget - g2);
            if (prunable(f))
                continue;
            open.push({f, g2, seq++, node});
        }
    }
    incumbent.stats.wall_time_ms = chrono::duration<double, milli>(
        chrono::steady_clock::now() - start_time).count();
    return incumbent;
}

} // namespace osp
