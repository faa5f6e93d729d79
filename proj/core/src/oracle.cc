#include "osp/oracle.h"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>
#include <vector>

using namespace std;

namespace osp {

namespace {

struct Node {
    State state;
    int g;
    int parent;
    int action;
};

struct OpenEntry {
    int g;
    long seq;
    int node;

    bool operator<(const OpenEntry &other) const {
        // priority_queue keeps the largest on top: min g first, then FIFO.
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

Solution brute_force_optimal(
    const OspTask &task, const OracleCaps &caps, const StatePredicate &prefer) {
    auto start_time = chrono::steady_clock::now();
    vector<Node> nodes;
    nodes.push_back({task.initial, 0, -1, -1});
    priority_queue<OpenEntry> open;
    long seq = 0;
    open.push({0, seq++, 0});
    unordered_map<State, int, StateHash> closed;

    int best_node = -1;
    int best_utility = 0;
    bool best_preferred = false;
    SearchStats stats;

    auto consider = [&](int node, int utility) {
        bool preferred = prefer && prefer(nodes[node].state);
        if (best_node != -1) {
            if (utility < best_utility)
                return;
            if (utility == best_utility) {
                if (nodes[node].g > nodes[best_node].g)
                    return;
                if (nodes[node].g == nodes[best_node].g &&
                    (best_preferred || !preferred))
                    return;
            }
        }
        best_node = node;
        best_utility = utility;
        best_preferred = preferred;
    };

    while (!open.empty()) {
        OpenEntry entry = open.top();
        open.pop();
        const State state = nodes[entry.node].state;
        int g = nodes[entry.node].g;
        auto closed_it = closed.find(state);
        if (closed_it != closed.end() && closed_it->second <= g) {
            ++stats.duplicate_hits;
            continue;
        }
        closed[state] = g;
        ++stats.expansions;
        if (stats.expansions > caps.max_states)
            throw CapExceededError(stats.expansions, "state cap exceeded");
        if (caps.max_ms > 0 && stats.expansions % 1024 == 0) {
            double elapsed = chrono::duration<double, milli>(
                chrono::steady_clock::now() - start_time).count();
            if (elapsed > caps.max_ms)
                throw CapExceededError(stats.expansions, "time cap exceeded");
        }
        consider(entry.node, state_utility(task, state));
        for (int action_index = 0; action_index < task.num_actions();
             ++action_index) {
            const Action &action = task.actions[action_index];
            if (!applicable(task, state, action))
                continue;
            int g2 = g + action.cost;
            if (g2 > task.budget)
                continue;
            State successor = apply(task, state, action);
            ++stats.generated;
            auto seen = closed.find(successor);
            if (seen != closed.end() && seen->second <= g2) {
                ++stats.duplicate_hits;
                continue;
            }
            int node = static_cast<int>(nodes.size());
            nodes.push_back({move(successor), g2, entry.node, action_index});
            open.push({g2, seq++, node});
        }
    }

    Solution solution;
    solution.utility = best_utility;
    solution.cost = nodes[best_node].g;
    solution.plan = extract_plan(nodes, best_node);
    solution.stats = stats;
    solution.stats.wall_time_ms = chrono::duration<double, milli>(
        chrono::steady_clock::now() - start_time).count();
    return solution;
}

} // namespace osp
