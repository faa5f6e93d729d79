#include "osp/selective.h"

#include <algorithm>
#include <cassert>
#include <sstream>

using namespace std;

namespace osp {

string verdict_name(Verdict verdict) {
    switch (verdict) {
    case Verdict::non_positive:
        return "non-positive";
    case Verdict::pure_positive:
        return "pure-positive";
    case Verdict::ambiguous:
        return "ambiguous";
    case Verdict::ambiguous_uncompiled:
        return "ambiguous-uncompiled";
    }
    return "?";
}

OspTask complete_preconditions(const OspTask &task) {
    OspTask result = task;
    for (Action &action : result.actions) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const FactPair &fact : action.eff) {
                if (action.pre_value(fact.var) != -1)
                    continue;
                const Variable &variable = result.variables[fact.var];
                int candidate = -1;
                int num_candidates = 0;
                for (int value = 0; value < variable.domain_size(); ++value) {
                    if (!fact_conflicts_with(result, {fact.var, value}, action.pre)) {
                        candidate = value;
                        ++num_candidates;
                    }
                }
                // A candidate equal to the effect value would turn the effect
                // into a no-op entry; the action is left unchanged instead.
                if (num_candidates == 1 && candidate != fact.value) {
                    action.pre.push_back({fact.var, candidate});
                    sort(action.pre.begin(), action.pre.end());
                    changed = true;
                }
            }
        }
    }
    return result;
}

int explicit_net_utility(const OspTask &task, const Action &action) {
    int total = 0;
    for (const FactPair &fact : action.eff) {
        int pre_value = action.pre_value(fact.var);
        if (pre_value != -1)
            total += task.utility_of(fact) - task.utility_of({fact.var, pre_value});
    }
    return total;
}

vector<int> refined_domain(const OspTask &task, const Action &action, int var) {
    assert(action.eff_value(var) != -1 && action.pre_value(var) == -1);
    int eff_utility = task.utility_of({var, action.eff_value(var)});
    vector<int> values;
    const Variable &variable = task.variables[var];
    for (int value = 0; value < variable.domain_size(); ++value) {
        if (variable.utilities[value] == eff_utility)
            continue;
        if (fact_conflicts_with(task, {var, value}, action.pre))
            continue;
        values.push_back(value);
    }
    return values;
}

vector<int> min_split_set(const OspTask &task, const Action &action) {
    vector<int> vars;
    for (const FactPair &fact : action.eff) {
        if (action.pre_value(fact.var) == -1 &&
            !refined_domain(task, action, fact.var).empty())
            vars.push_back(fact.var);
    }
    return vars;
}

namespace {

// Origin values a split or unit-effect compilation enumerates for an
// unconstrained effect variable.
vector<int> origin_values(
    const OspTask &task, const Action &action, int var,
    const CompileOptions &options) {
    if (options.origin_policy == OriginPolicy::refined)
        return refined_domain(task, action, var);
    vector<int> values;
    const Variable &variable = task.variables[var];
    for (int value = 0; value < variable.domain_size(); ++value) {
        if (!fact_conflicts_with(task, {var, value}, action.pre))
            values.push_back(value);
    }
    return values;
}

long domain_product(const vector<vector<int>> &domains) {
    long product = 1;
    for (const vector<int> &domain : domains) {
        product *= static_cast<long>(domain.size());
        if (product > 1000000)
            return product;
    }
    return product;
}

void enumerate_assignments(
    const vector<int> &vars, const vector<vector<int>> &domains,
    const function<void(const vector<FactPair> &)> &fn) {
    vector<size_t> odometer(vars.size(), 0);
    vector<FactPair> assignment(vars.size());
    while (true) {
        for (size_t i = 0; i < vars.size(); ++i)
            assignment[i] = {vars[i], domains[i][odometer[i]]};
        fn(assignment);
        size_t i = vars.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < domains[i].size())
                break;
            odometer[i] = 0;
            if (i == 0)
                return;
        }
        if (vars.empty())
            return;
    }
}

} // namespace

SplitReport classify_action(
    const OspTask &task, int action_index, const CompileOptions &options) {
    const Action &action = task.actions[action_index];
    SplitReport report;
    report.action_index = action_index;
    report.action = action.name;
    report.enu = explicit_net_utility(task, action);
    report.mss = min_split_set(task, action);
    for (const FactPair &fact : action.eff) {
        if (action.pre_value(fact.var) == -1)
            report.refined[fact.var] = refined_domain(task, action, fact.var);
    }
    UtilityInterval interval = net_utility_interval(task, action);
    report.floor = interval.floor;
    report.ceiling = interval.ceiling;
    if (report.floor > 0) {
        report.verdict = Verdict::pure_positive;
        return report;
    }
    if (report.ceiling <= 0) {
        report.verdict = Verdict::non_positive;
        return report;
    }
    report.verdict = Verdict::ambiguous;
    vector<vector<int>> domains;
    for (int var : report.mss)
        domains.push_back(report.refined[var]);
    long product = domain_product(domains);
    if (product > options.instance_cap) {
        if (!options.cap_fallback)
            throw InstanceExplosionError(
                product, "action " + action.name + " would split into " +
                to_string(product) + " instances (cap " +
                to_string(options.instance_cap) + ")");
        report.verdict = Verdict::ambiguous_uncompiled;
        return report;
    }
    enumerate_assignments(
        report.mss, domains, [&](const vector<FactPair> &assignment) {
            SplitInstance instance;
            instance.assignment = assignment;
            int net = report.enu;
            for (const FactPair &origin : assignment)
                net += task.utility_of({origin.var, action.eff_value(origin.var)}) -
                       task.utility_of(origin);
            instance.net_utility = net;
            instance.positive = net > 0;
            report.instances.push_back(move(instance));
        });
    return report;
}

vector<SplitReport> classify_all(const OspTask &task, const CompileOptions &options) {
    vector<SplitReport> reports;
    for (int i = 0; i < task.num_actions(); ++i)
        reports.push_back(classify_action(task, i, options));
    return reports;
}

SplitResult selective_split(const OspTask &task, const CompileOptions &options) {
    return selective_split(task, classify_all(task, options), options);
}

SplitResult selective_split(
    const OspTask &task, const vector<SplitReport> &reports,
    const CompileOptions &options) {
    SplitResult result;
    result.task = task;
    result.task.actions.clear();
    result.reports = reports;
    for (int i = 0; i < task.num_actions(); ++i) {
        const Action &action = task.actions[i];
        SplitReport &report = result.reports[i];
        if (report.verdict != Verdict::ambiguous) {
            result.task.actions.push_back(action);
            continue;
        }
        vector<vector<int>> domains;
        for (int var : report.mss)
            domains.push_back(origin_values(task, action, var, options));
        long product = domain_product(domains);
        if (product > options.instance_cap) {
            if (!options.cap_fallback)
                throw InstanceExplosionError(
                    product, "action " + action.name + " would split into " +
                    to_string(product) + " instances (cap " +
                    to_string(options.instance_cap) + ")");
            report.verdict = Verdict::ambiguous_uncompiled;
            result.task.actions.push_back(action);
            continue;
        }
        enumerate_assignments(
            report.mss, domains, [&](const vector<FactPair> &assignment) {
                Action instance;
                instance.pre = action.pre;
                ostringstream name;
                name << action.name;
                for (const FactPair &origin : assignment) {
                    instance.pre.push_back(origin);
                    name << "@" << task.variables[origin.var].name << "="
                         << task.variables[origin.var].value_names[origin.value];
                }
                for (const FactPair &fact : action.eff) {
                    if (instance.pre.end() ==
                        find(instance.pre.begin(), instance.pre.end(), fact))
                        instance.eff.push_back(fact);
                }
                if (instance.eff.empty())
                    return; // the instance would be a pure no-op
                instance.name = name.str();
                instance.cost = action.cost;
                sort(instance.pre.begin(), instance.pre.end());
                sort(instance.eff.begin(), instance.eff.end());
                result.task.actions.push_back(move(instance));
            });
    }
    return result;
}

string split_reports_csv(const vector<SplitReport> &reports) {
    ostringstream out;
    out << "action,enu,floor,ceiling,verdict,instance_count\n";
    for (const SplitReport &report : reports) {
        out << report.action << "," << report.enu << "," << report.floor << ","
            << report.ceiling << "," << verdict_name(report.verdict) << ","
            << report.instances.size() << "\n";
    }
    return out.str();
}

} // namespace osp
