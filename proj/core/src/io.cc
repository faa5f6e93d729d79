#include "osp/io.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace std;

namespace osp {

namespace {

struct TokenLine {
    int number;
    vector<string> tokens;
};

vector<TokenLine> tokenize(const string &text) {
    vector<TokenLine> lines;
    istringstream stream(text);
    string line;
    int number = 0;
    while (getline(stream, line)) {
        ++number;
        size_t comment = line.find('#');
        if (comment != string::npos)
            line = line.substr(0, comment);
        istringstream words(line);
        TokenLine token_line{number, {}};
        string word;
        while (words >> word)
            token_line.tokens.push_back(word);
        if (!token_line.tokens.empty())
            lines.push_back(move(token_line));
    }
    return lines;
}

class TaskParser {
    vector<TokenLine> lines;
    size_t pos = 0;

    const TokenLine &peek() const {
        if (pos >= lines.size())
            throw SyntaxError(last_line(), "unexpected end of input");
        return lines[pos];
    }

    const TokenLine &next() {
        const TokenLine &line = peek();
        ++pos;
        return line;
    }

    int last_line() const {
        return lines.empty() ? 0 : lines.back().number;
    }

    static int parse_int(const TokenLine &line, const string &token) {
        try {
            size_t used = 0;
            int value = stoi(token, &used);
            if (used != token.size())
                throw invalid_argument(token);
            return value;
        } catch (const exception &) {
            throw SyntaxError(line.number, "expected integer, got '" + token + "'");
        }
    }

    FactPair parse_fact(const OspTask &task, const TokenLine &line, const string &token) const {
        size_t eq = token.find('=');
        if (eq == string::npos)
            throw SyntaxError(line.number, "expected var=val token, got '" + token + "'");
        string var_name = token.substr(0, eq);
        string value_name = token.substr(eq + 1);
        int var = task.find_variable(var_name);
        if (var == -1)
            throw SemanticError(line.number, "unknown variable '" + var_name + "'");
        int value = task.find_value(var, value_name);
        if (value == -1)
            throw SemanticError(
                line.number, "unknown value '" + value_name + "' for variable '" +
                var_name + "'");
        return {var, value};
    }

    vector<FactPair> parse_assignment(
        const OspTask &task, const TokenLine &line, size_t first, int count,
        const string &what) const {
        if (line.tokens.size() != first + count)
            throw SyntaxError(
                line.number, what + " expects " + to_string(count) + " facts");
        vector<FactPair> facts;
        for (int i = 0; i < count; ++i) {
            FactPair fact = parse_fact(task, line, line.tokens[first + i]);
            for (const FactPair &seen : facts) {
                if (seen.var == fact.var)
                    throw SemanticError(
                        line.number,
                        what + " assigns variable '" +
                        task.variables[fact.var].name + "' twice");
            }
            facts.push_back(fact);
        }
        sort(facts.begin(), facts.end());
        return facts;
    }

public:
    explicit TaskParser(const string &text) : lines(tokenize(text)) {
    }

    OspTask parse() {
        OspTask task;
        {
            const TokenLine &line = next();
            if (line.tokens != vector<string>{"osp-sas", "1"})
                throw SyntaxError(line.number, "expected 'osp-sas 1' header");
        }
        int num_vars;
        {
            const TokenLine &line = next();
            if (line.tokens.size() != 2 || line.tokens[0] != "vars")
                throw SyntaxError(line.number, "expected 'vars <N>'");
            num_vars = parse_int(line, line.tokens[1]);
            if (num_vars < 1)
                throw SemanticError(line.number, "task needs at least one variable");
        }
        for (int i = 0; i < num_vars; ++i) {
            const TokenLine &line = next();
            if (line.tokens.size() != 3 || line.tokens[0] != "var")
                throw SyntaxError(line.number, "expected 'var <name> <k>'");
            Variable variable;
            variable.name = line.tokens[1];
            if (task.find_variable(variable.name) != -1)
                throw SemanticError(
                    line.number, "duplicate variable '" + variable.name + "'");
            int domain = parse_int(line, line.tokens[2]);
            if (domain < 1)
                throw SemanticError(line.number, "domain size must be at least 1");
            for (int d = 0; d < domain; ++d) {
                const TokenLine &value_line = next();
                if (value_line.tokens.size() != 3 || value_line.tokens[0] != "val")
                    throw SyntaxError(
                        value_line.number, "expected 'val <factname> <utility>'");
                const string &value_name = value_line.tokens[1];
                if (find(variable.value_names.begin(), variable.value_names.end(),
                         value_name) != variable.value_names.end())
                    throw SemanticError(
                        value_line.number,
                        "duplicate value '" + value_name + "' in variable '" +
                        variable.name + "'");
                variable.value_names.push_back(value_name);
                variable.utilities.push_back(
                    parse_int(value_line, value_line.tokens[2]));
            }
            task.variables.push_back(move(variable));
        }
        while (peek().tokens[0] == "mutex") {
            const TokenLine &line = next();
            if (line.tokens.size() < 2)
                throw SyntaxError(line.number, "expected 'mutex <m> <facts...>'");
            int count = parse_int(line, line.tokens[1]);
            if (count < 2)
                throw SemanticError(line.number, "mutex group needs at least two facts");
            if (static_cast<int>(line.tokens.size()) != 2 + count)
                throw SyntaxError(
                    line.number, "mutex group expects " + to_string(count) + " facts");
            vector<FactPair> group;
            for (int i = 0; i < count; ++i)
                group.push_back(parse_fact(task, line, line.tokens[2 + i]));
            task.mutex_groups.push_back(move(group));
        }
        {
            const TokenLine &line = next();
            if (line.tokens.empty() || line.tokens[0] != "init")
                throw SyntaxError(line.number, "expected 'init <facts...>'");
            vector<FactPair> facts =
                parse_assignment(task, line, 1, num_vars, "init");
            task.initial.assign(num_vars, -1);
            for (const FactPair &fact : facts)
                task.initial[fact.var] = fact.value;
            for (int var = 0; var < num_vars; ++var) {
                if (task.initial[var] == -1)
                    throw SemanticError(
                        line.number, "init leaves variable '" +
                        task.variables[var].name + "' unassigned");
            }
            if (!state_mutex_consistent(task, task.initial))
                throw SemanticError(line.number, "initial state violates a mutex group");
        }
        {
            const TokenLine &line = next();
            if (line.tokens.size() == 2 && line.tokens[0] == "budget") {
                task.budget_spec.is_fraction = false;
                task.budget_spec.amount = parse_int(line, line.tokens[1]);
            } else if (line.tokens.size() == 4 && line.tokens[0] == "budget-frac" &&
                       line.tokens[2] == "cstar") {
                const string &frac = line.tokens[1];
                size_t slash = frac.find('/');
                if (slash == string::npos)
                    throw SyntaxError(line.number, "expected fraction p/q");
                task.budget_spec.is_fraction = true;
                task.budget_spec.numerator = parse_int(line, frac.substr(0, slash));
                task.budget_spec.denominator = parse_int(line, frac.substr(slash + 1));
                task.budget_spec.cstar = parse_int(line, line.tokens[3]);
                if (task.budget_spec.denominator <= 0 ||
                    task.budget_spec.numerator < 0 || task.budget_spec.cstar < 0)
                    throw SemanticError(line.number, "invalid budget fraction");
            } else {
                throw SyntaxError(
                    line.number,
                    "expected 'budget <int>' or 'budget-frac <p>/<q> cstar <int>'");
            }
            task.budget = task.budget_spec.resolve();
            if (task.budget < 0)
                throw SemanticError(line.number, "budget must be nonnegative");
        }
        int num_actions;
        {
            const TokenLine &line = next();
            if (line.tokens.size() != 2 || line.tokens[0] != "actions")
                throw SyntaxError(line.number, "expected 'actions <M>'");
            num_actions = parse_int(line, line.tokens[1]);
            if (num_actions < 0)
                throw SemanticError(line.number, "action count must be nonnegative");
        }
        for (int i = 0; i < num_actions; ++i) {
            Action action;
            {
                const TokenLine &line = next();
                if (line.tokens.size() != 4 || line.tokens[0] != "action" ||
                    line.tokens[2] != "cost")
                    throw SyntaxError(line.number, "expected 'action <name> cost <int>'");
                action.name = line.tokens[1];
                if (task.find_action(action.name) != -1)
                    throw SemanticError(
                        line.number, "duplicate action '" + action.name + "'");
                action.cost = parse_int(line, line.tokens[3]);
                if (action.cost < 0)
                    throw SemanticError(line.number, "cost must be nonnegative");
            }
            {
                const TokenLine &line = next();
                if (line.tokens.size() < 2 || line.tokens[0] != "pre")
                    throw SyntaxError(line.number, "expected 'pre <j> <facts...>'");
                int count = parse_int(line, line.tokens[1]);
                action.pre = parse_assignment(task, line, 2, count, "pre");
            }
            {
                const TokenLine &line = next();
                if (line.tokens.size() < 2 || line.tokens[0] != "eff")
                    throw SyntaxError(line.number, "expected 'eff <k> <facts...>'");
                int count = parse_int(line, line.tokens[1]);
                vector<FactPair> effects =
                    parse_assignment(task, line, 2, count, "eff");
                // A no-op effect entry (identical to a precondition entry)
                // is stripped so "no change" never counts as an effect.
                for (const FactPair &fact : effects) {
                    if (action.pre_value(fact.var) != fact.value)
                        action.eff.push_back(fact);
                }
                if (action.eff.empty())
                    throw SemanticError(
                        line.number,
                        "action '" + action.name + "' has no effective effect");
            }
            task.actions.push_back(move(action));
        }
        if (pos != lines.size())
            throw SyntaxError(lines[pos].number, "trailing content after actions");
        return task;
    }
};

} // namespace

OspTask parse_task(const string &text) {
    return TaskParser(text).parse();
}

OspTask parse_task_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw TaskError("cannot open task file '" + path + "'");
    stringstream buffer;
    buffer << in.rdbuf();
    return parse_task(buffer.str());
}

string serialize_task(const OspTask &task) {
    ostringstream out;
    out << "osp-sas 1\n";
    out << "vars " << task.num_variables() << "\n";
    for (const Variable &variable : task.variables) {
        out << "var " << variable.name << " " << variable.domain_size() << "\n";
        for (int value = 0; value < variable.domain_size(); ++value)
            out << "val " << variable.value_names[value] << " "
                << variable.utilities[value] << "\n";
    }
    for (const vector<FactPair> &group : task.mutex_groups) {
        out << "mutex " << group.size();
        for (const FactPair &fact : group)
            out << " " << task.variables[fact.var].name << "="
                << task.variables[fact.var].value_names[fact.value];
        out << "\n";
    }
    out << "init";
    for (int var = 0; var < task.num_variables(); ++var)
        out << " " << task.variables[var].name << "="
            << task.variables[var].value_names[task.initial[var]];
    out << "\n";
    if (task.budget_spec.is_fraction) {
        out << "budget-frac " << task.budget_spec.numerator << "/"
            << task.budget_spec.denominator << " cstar " << task.budget_spec.cstar
            << "\n";
    } else {
        out << "budget " << task.budget_spec.amount << "\n";
    }
    out << "actions " << task.num_actions() << "\n";
    for (const Action &action : task.actions) {
        out << "action " << action.name << " cost " << action.cost << "\n";
        out << "pre " << action.pre.size();
        for (const FactPair &fact : action.pre)
            out << " " << task.variables[fact.var].name << "="
                << task.variables[fact.var].value_names[fact.value];
        out << "\n";
        out << "eff " << action.eff.size();
        for (const FactPair &fact : action.eff)
            out << " " << task.variables[fact.var].name << "="
                << task.variables[fact.var].value_names[fact.value];
        out << "\n";
    }
    return out.str();
}

void write_task_file(const OspTask &task, const string &path) {
    ofstream out(path);
    if (!out)
        throw TaskError("cannot write task file '" + path + "'");
    out << serialize_task(task);
}

OspTask assign_ipc_values(const OspTask &task, uint64_t seed) {
    OspTask result = task;
    uint64_t fact_index = 0;
    for (Variable &variable : result.variables) {
        for (int value = 0; value < variable.domain_size(); ++value) {
            if (variable.utilities[value] != 0)
                throw NotClassicalError(
                    "task already carries nonzero utilities");
            variable.utilities[value] =
                static_cast<int>((fact_index + seed) % 3);
            ++fact_index;
        }
    }
    return result;
}

namespace {

int draw(mt19937_64 &rng, int lo, int hi) {
    // Inclusive bounds; plain modulo keeps the stream reproducible.
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

bool draw_probability(mt19937_64 &rng, double probability) {
    return (rng() % 1000000) < static_cast<uint64_t>(probability * 1000000);
}

} // namespace

OspTask generate_task(const GenParams &params) {
    mt19937_64 rng(params.seed);
    OspTask task;
    for (int i = 0; i < params.num_vars; ++i) {
        Variable variable;
        variable.name = "v" + to_string(i);
        int domain = params.max_domain >= 2 ? draw(rng, 2, params.max_domain) : 1;
        for (int d = 0; d < domain; ++d) {
            variable.value_names.push_back(
                "v" + to_string(i) + "d" + to_string(d));
            variable.utilities.push_back(draw(rng, 0, params.max_utility));
        }
        task.variables.push_back(move(variable));
    }
    for (int var = 0; var < params.num_vars; ++var)
        task.initial.push_back(
            draw(rng, 0, task.variables[var].domain_size() - 1));
    task.budget_spec.amount = draw(rng, 0, params.max_budget);
    task.budget = task.budget_spec.resolve();
    for (int i = 0; i < params.num_actions; ++i) {
        Action action;
        action.name = "a" + to_string(i);
        action.cost = draw(rng, 0, params.max_cost);
        int num_effects = min(task.num_variables(), draw(rng, 1, 2));
        vector<int> vars;
        while (static_cast<int>(vars.size()) < num_effects) {
            int var = draw(rng, 0, task.num_variables() - 1);
            if (find(vars.begin(), vars.end(), var) == vars.end())
                vars.push_back(var);
        }
        for (int var : vars) {
            int domain = task.variables[var].domain_size();
            int eff_value = draw(rng, 0, domain - 1);
            action.eff.push_back({var, eff_value});
            if (domain > 1 &&
                !draw_probability(rng, params.incomplete_pre_probability)) {
                int pre_value = draw(rng, 0, domain - 2);
                if (pre_value >= eff_value)
                    ++pre_value;
                action.pre.push_back({var, pre_value});
            }
        }
        if (task.num_variables() > num_effects &&
            draw(rng, 0, 99) < params.prevail_percent) {
            int var;
            do {
                var = draw(rng, 0, task.num_variables() - 1);
            } while (find(vars.begin(), vars.end(), var) != vars.end());
            action.pre.push_back(
                {var, draw(rng, 0, task.variables[var].domain_size() - 1)});
        }
        sort(action.pre.begin(), action.pre.end());
        sort(action.eff.begin(), action.eff.end());
        task.actions.push_back(move(action));
    }
    return task;
}

} // namespace osp
