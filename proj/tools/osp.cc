#include "osp/bench.h"
#include "osp/equivalence.h"
#include "osp/io.h"
#include "osp/oracle.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace std;
using namespace osp;

namespace {

void write_text(const string &path, const string &text) {
    ofstream out(path);
    if (!out)
        throw TaskError("cannot write '" + path + "'");
    out << text;
}

vector<Strategy> parse_strategies(const string &csv) {
    vector<Strategy> strategies;
    istringstream stream(csv);
    string name;
    while (getline(stream, name, ',')) {
        optional<Strategy> strategy = strategy_from_name(name);
        if (!strategy)
            throw CLI::ValidationError("unknown strategy '" + name + "'");
        strategies.push_back(*strategy);
    }
    if (strategies.empty())
        throw CLI::ValidationError("no strategies given");
    return strategies;
}

pair<uint64_t, uint64_t> parse_seed_range(const string &range) {
    size_t dots = range.find("..");
    if (dots == string::npos)
        return {stoull(range), stoull(range)};
    return {stoull(range.substr(0, dots)), stoull(range.substr(dots + 2))};
}

CompileOptions parse_origin_policy(const string &name) {
    CompileOptions options;
    if (name == "refined")
        options.origin_policy = OriginPolicy::refined;
    else if (name == "covering")
        options.origin_policy = OriginPolicy::covering;
    else
        throw CLI::ValidationError("unknown origin policy '" + name + "'");
    return options;
}

void print_solution(
    const string &label, const OspTask &task, const Solution &solution) {
    cout << label << " utility " << solution.utility << " cost "
         << solution.cost << " expansions " << solution.stats.expansions
         << " generated " << solution.stats.generated << "\n";
    cout << label << " plan:";
    for (int step : solution.plan)
        cout << " " << task.actions[step].name;
    cout << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Oversubscription planning with offline action-split compilations"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a random task");
    GenParams gen_params;
    string gen_output;
    gen->add_option("--seed", gen_params.seed, "RNG seed");
    gen->add_option("--vars", gen_params.num_vars, "number of variables");
    gen->add_option("--dom", gen_params.max_domain, "max domain size");
    gen->add_option("--acts", gen_params.num_actions, "number of actions");
    gen->add_option("--pincomplete", gen_params.incomplete_pre_probability,
                    "probability of omitting an effect precondition");
    gen->add_option("--max-cost", gen_params.max_cost, "max action cost");
    gen->add_option("--max-utility", gen_params.max_utility, "max fact utility");
    gen->add_option("--max-budget", gen_params.max_budget, "max budget");
    gen->add_option("-o,--output", gen_output, "output file (default stdout)");

    // compile
    auto *compile = app.add_subcommand("compile", "Compile a task offline");
    string compile_input, compile_output, compile_report, compile_ledger;
    string compile_strategy = "base";
    string compile_policy = "covering";
    compile->add_option("file", compile_input, "input task")->required();
    compile->add_option("--strategy", compile_strategy,
                        "none|base|blind|pretotal|unit-all");
    compile->add_option("--origin-policy", compile_policy, "refined|covering");
    compile->add_option("-o,--output", compile_output, "compiled task file");
    compile->add_option("--report", compile_report, "split report CSV");
    compile->add_option("--ledger", compile_ledger, "compiled-action ledger CSV");

    // solve
    auto *solve = app.add_subcommand("solve", "Solve a task optimally with BFBB");
    string solve_input, solve_csv;
    string solve_strategy = "none";
    string solve_heuristic = "maxfact";
    string solve_policy = "covering";
    long solve_cap_states = 2000000;
    double solve_cap_ms = 0;
    solve->add_option("file", solve_input, "input task")->required();
    solve->add_option("--strategy", solve_strategy,
                      "none|base|blind|pretotal|unit-all");
    solve->add_option("--heuristic", solve_heuristic, "maxfact");
    solve->add_option("--origin-policy", solve_policy, "refined|covering");
    solve->add_option("--csv", solve_csv, "append a bench-style CSV row");
    solve->add_option("--cap-states", solve_cap_states, "expansion cap");
    solve->add_option("--cap-ms", solve_cap_ms, "time cap in ms");

    // verify
    auto *verify = app.add_subcommand(
        "verify", "Check the equivalence theorems on generated tasks");
    string verify_seeds = "1..50";
    string verify_strategies = "base,blind,pretotal,unit-all";
    string verify_csv_path;
    string verify_policy = "covering";
    VerifyConfig verify_config;
    verify->add_option("--seeds", verify_seeds, "seed range, e.g. 1..50");
    verify->add_option("--vars", verify_config.gen.num_vars, "number of variables");
    verify->add_option("--dom", verify_config.gen.max_domain, "max domain size");
    verify->add_option("--acts", verify_config.gen.num_actions, "number of actions");
    verify->add_option("--pincomplete",
                       verify_config.gen.incomplete_pre_probability,
                       "probability of omitting an effect precondition");
    verify->add_option("--max-budget", verify_config.gen.max_budget, "max budget");
    verify->add_option("--strategies", verify_strategies, "comma-separated");
    verify->add_option("--cap-states", verify_config.caps.max_states,
                       "oracle state cap");
    verify->add_option("--origin-policy", verify_policy, "refined|covering");
    verify->add_option("--csv", verify_csv_path, "write per-task verdicts CSV");

    // bench
    auto *bench = app.add_subcommand("bench", "Benchmark strategies on task files");
    vector<string> bench_files;
    string bench_fractions = "1/4,1/2,3/4,1/1";
    string bench_strategies = "base,blind,pretotal";
    string bench_csv_path;
    string bench_policy = "covering";
    long bench_cap = 2000000;
    bench->add_option("files", bench_files, "task files (budget-frac form)")
        ->required();
    bench->add_option("--fractions", bench_fractions, "comma-separated p/q");
    bench->add_option("--strategies", bench_strategies, "comma-separated");
    bench->add_option("--cap-expansions", bench_cap, "per-row expansion cap");
    bench->add_option("--origin-policy", bench_policy, "refined|covering");
    bench->add_option("--csv", bench_csv_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &error) {
        if (error.get_exit_code() == 0)
            return app.exit(error);
        app.exit(error);
        return 2;
    }

    try {
        if (gen->parsed()) {
            OspTask task = generate_task(gen_params);
            string text = serialize_task(task);
            if (gen_output.empty())
                cout << text;
            else
                write_text(gen_output, text);
            return 0;
        }
        if (compile->parsed()) {
            OspTask task = parse_task_file(compile_input);
            optional<Strategy> strategy = strategy_from_name(compile_strategy);
            if (!strategy)
                throw TaskError("unknown strategy '" + compile_strategy + "'");
            CompilationResult result = compile_for_strategy(
                task, *strategy, parse_origin_policy(compile_policy));
            string text = serialize_task(result.task);
            if (compile_output.empty())
                cout << text;
            else
                write_text(compile_output, text);
            if (!compile_report.empty())
                write_text(compile_report, split_reports_csv(result.reports));
            if (!compile_ledger.empty()) {
                if (!result.compiled)
                    throw TaskError("no ledger: strategy did not unit-effect-compile");
                write_text(compile_ledger, ledger_csv(*result.compiled));
            }
            return 0;
        }
        if (solve->parsed()) {
            if (solve_heuristic != "maxfact")
                throw TaskError("unknown heuristic '" + solve_heuristic + "'");
            OspTask task = parse_task_file(solve_input);
            optional<Strategy> strategy = strategy_from_name(solve_strategy);
            if (!strategy)
                throw TaskError("unknown strategy '" + solve_strategy + "'");
            CompilationResult result = compile_for_strategy(
                task, *strategy, parse_origin_policy(solve_policy));
            SearchLimits limits;
            limits.max_expansions = solve_cap_states;
            limits.max_ms = solve_cap_ms;
            FinalStatePreference prefer = nullptr;
            if (result.compiled) {
                const CompiledTask *compiled = &*result.compiled;
                prefer = [compiled](const State &state) {
                    return compiled->is_closed(state);
                };
            }
            Solution solution =
                bfbb_solve(result.task, heuristic_max_fact, limits, prefer);
            print_solution("solved", result.task, solution);
            if (result.compiled) {
                Plan restored = restore_plan(task, *result.compiled, solution.plan);
                cout << "restored plan:";
                for (int step : restored)
                    cout << " " << task.actions[step].name;
                cout << "\n";
            }
            if (!solve_csv.empty()) {
                ostringstream row;
                row << solve_input << ",-," << strategy_name(*strategy) << ","
                    << solution.stats.expansions << ","
                    << solution.stats.generated << ","
                    << static_cast<long>(solution.stats.wall_time_ms) << ","
                    << solution.utility << "," << solution.cost << ",1,"
                    << result.task.num_actions() << ","
                    << result.task.num_variables() << "\n";
                write_text(solve_csv, row.str());
            }
            return 0;
        }
        if (verify->parsed()) {
            auto [begin, end] = parse_seed_range(verify_seeds);
            verify_config.seed_begin = begin;
            verify_config.seed_end = end;
            verify_config.strategies = parse_strategies(verify_strategies);
            verify_config.options = parse_origin_policy(verify_policy);
            VerifySummary summary = run_verify(verify_config);
            if (!verify_csv_path.empty())
                write_text(verify_csv_path, summary.csv);
            cout << "verified " << summary.tasks << " tasks, "
                 << summary.failures << " failures\n";
            return summary.failures == 0 ? 0 : 1;
        }
        if (bench->parsed()) {
            BenchConfig config;
            for (const string &file : bench_files)
                config.tasks.emplace_back(file, parse_task_file(file));
            config.fractions.clear();
            istringstream fractions(bench_fractions);
            string token;
            while (getline(fractions, token, ',')) {
                size_t slash = token.find('/');
                if (slash == string::npos)
                    config.fractions.emplace_back(stoi(token), 1);
                else
                    config.fractions.emplace_back(
                        stoi(token.substr(0, slash)),
                        stoi(token.substr(slash + 1)));
            }
            config.strategies = parse_strategies(bench_strategies);
            config.options = parse_origin_policy(bench_policy);
            config.limits.max_expansions = bench_cap;
            string csv = run_benchmark(config);
            if (bench_csv_path.empty())
                cout << csv;
            else
                write_text(bench_csv_path, csv);
            return 0;
        }
    } catch (const CLI::Error &error) {
        cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const exception &error) {
        cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
