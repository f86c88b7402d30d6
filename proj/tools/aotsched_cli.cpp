// Copyright 2026 The aotsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: gen, solve, experiment, trace, summary.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible, 4 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aotsched.hpp"

namespace {

using namespace aotsched;

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

struct InstanceSource {
    std::optional<std::uint64_t> seed;
    std::string instance_file;
    std::string config_file;
    std::optional<double> e_max;
    std::optional<int> horizon;
};

struct SolveFlags {
    std::string strategy = "heuristic";
    std::optional<std::uint64_t> node_limit;
    std::string delay_objective = "makespan";
    std::string out;
};

void add_source(CLI::App* cmd, InstanceSource& src) {
    cmd->add_option("--seed", src.seed, "Generate the instance from this seed");
    cmd->add_option("--instance", src.instance_file, "Read the instance from a file")->excludes("--seed");
    cmd->add_option("--config", src.config_file, "Experiment config whose gen.* keys shape generated instances");
    cmd->add_option("--emax", src.e_max, "Energy budget E_max in joules");
    cmd->add_option("--horizon", src.horizon, "Schedule horizon T in slots");
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--strategy", f.strategy, "heuristic, age-optimal, delay-optimal, mec-only or mec-round-robin");
    cmd->add_option("--node-limit", f.node_limit, "Search node limit for the exact strategies");
    cmd->add_option("--delay-objective", f.delay_objective, "makespan or sum")->check(CLI::IsMember({"makespan", "sum"}));
}

Instance resolve_instance(const InstanceSource& src) {
    Instance inst;
    if (!src.instance_file.empty()) {
        inst = read_instance_file(src.instance_file);
        if (src.horizon) {
            if (*src.horizon < 1 || *src.horizon > inst.channel.length())
                throw std::invalid_argument("--horizon must lie in [1, " + std::to_string(inst.channel.length()) +
                                            "] for this instance file");
            inst.horizon = *src.horizon;
            inst.channel.gains.resize(static_cast<std::size_t>(*src.horizon));
        }
    } else {
        GenerationConfig gen;
        if (!src.config_file.empty()) gen = read_experiment_config_file(src.config_file).gen;
        if (src.horizon) gen.horizon = *src.horizon;
        inst = generate_instance(src.seed.value_or(1), gen);
    }
    if (src.e_max) inst.e_max = *src.e_max;
    require_valid(inst);
    return inst;
}

SolveOptions solve_options(const SolveFlags& f) {
    SolveOptions o;
    if (f.node_limit) o.node_limit = *f.node_limit;
    o.delay_objective = parse_delay_objective(f.delay_objective);
    return o;
}

Strategy strategy_of(const std::string& name) {
    auto s = parse_strategy(name);
    if (!s) throw std::invalid_argument("unknown strategy '" + name + "'");
    return *s;
}

void print_result(const Instance& inst, const StrategyResult& r) {
    std::cout << "strategy        " << r.strategy << '\n';
    std::cout << "sum_aot         " << format_csv(r.sum_aot) << '\n';
    std::cout << "completion_time " << r.completion_time << '\n';
    std::cout << "energy          " << format_csv(schedule_energy(inst, r.schedule)) << " / " << format_csv(inst.e_max)
              << '\n';
    if (r.strategy != "heuristic") std::cout << "proven_optimal  " << (r.proven_optimal ? "yes" : "no") << '\n';
    std::cout << "order          ";
    for (const auto& id : r.order) std::cout << ' ' << id.str();
    std::cout << '\n';
}

int cmd_gen(const InstanceSource& src, const std::string& out) {
    const Instance inst = resolve_instance(src);
    if (out.empty()) {
        write_instance(std::cout, inst);
        return 0;
    }
    const std::filesystem::path dir(out);
    detail::ensure_dir(dir);
    const auto path = dir / ("instance_" + std::to_string(src.seed.value_or(1)) + ".txt");
    write_instance_file(path.string(), inst);
    std::cout << path.string() << '\n';
    return 0;
}

int cmd_solve(const InstanceSource& src, const SolveFlags& f, bool trace) {
    const Instance inst = resolve_instance(src);
    const Strategy strategy = strategy_of(f.strategy);
    const TraceExport t = export_trace(inst, strategy, solve_options(f));
    print_result(inst, t.result);
    const auto violations = check_schedule(inst, t.result.schedule);
    for (const auto& v : violations) std::cerr << "violation: " << v.message << '\n';
    if (!f.out.empty()) {
        write_trace_files(t, f.out);
        std::cout << "wrote " << (std::filesystem::path(f.out) / "age_trace.csv").string() << " and "
                  << (std::filesystem::path(f.out) / "schedule.csv").string() << '\n';
    } else if (trace) {
        std::cout << '\n' << t.age_csv << '\n' << t.schedule_csv;
    }
    return 0;
}

void print_summary(const Summary& s) {
    std::printf("AoT gap delay-optimal - age-optimal      %10.4f slots\n", s.aot_gap_delay_age);
    std::printf("AoT gap delay-optimal - heuristic        %10.4f slots\n", s.aot_gap_delay_heuristic);
    std::printf("AoT ratio age-optimal / heuristic        %10.4f\n", s.aot_ratio_age_heuristic);
    std::printf("CT gap age-optimal - delay-optimal       %10.4f slots\n", s.ct_gap_age_delay);
    std::printf("CT gap heuristic - delay-optimal         %10.4f slots\n", s.ct_gap_heuristic_delay);
    std::printf("CT ratio delay-optimal / heuristic       %10.4f\n", s.ct_ratio_delay_heuristic);
}

bool has_summary_strategies(const std::vector<ComparisonRow>& rows) {
    for (Strategy s : {Strategy::Heuristic, Strategy::AgeOptimal, Strategy::DelayOptimal}) {
        bool found = false;
        for (const auto& r : rows) found = found || r.strategy == s;
        if (!found) return false;
    }
    return true;
}

struct ExperimentFlags {
    std::string config_file;
    std::optional<std::uint64_t> seed;
    std::string seeds;
    std::string emax_grid;
    std::string strategies;
    std::optional<int> horizon;
    std::optional<int> threads;
};

int cmd_experiment(const ExperimentFlags& x, const SolveFlags& f, CLI::App* cmd) {
    ExperimentConfig cfg;
    if (!x.config_file.empty()) cfg = read_experiment_config_file(x.config_file);
    if (x.seed) {
        cfg.base_seed = *x.seed;
        cfg.seeds.clear();
    }
    if (!x.seeds.empty()) apply_seed_spec(cfg, x.seeds);
    if (!x.emax_grid.empty()) cfg.e_max_grid = parse_emax_grid(x.emax_grid);
    if (!x.strategies.empty()) cfg.strategies = parse_strategy_list(x.strategies);
    if (x.horizon) cfg.gen.horizon = *x.horizon;
    if (x.threads) cfg.threads = *x.threads;
    if (f.node_limit) cfg.solve.node_limit = *f.node_limit;
    if (cmd->count("--delay-objective")) cfg.solve.delay_objective = parse_delay_objective(f.delay_objective);
    if (!f.out.empty()) cfg.out_dir = f.out;
    if (cfg.out_dir.empty()) cfg.out_dir = "results";

    const ExperimentResult res = run_experiment(cfg);
    std::printf("%-8s %-16s %6s %6s %14s %12s %12s\n", "e_max", "strategy", "seeds", "infeas", "mean_sum_aot",
                "mean_ct", "runtime_ms");
    for (const auto& r : res.rows)
        std::printf("%-8.4g %-16s %6zu %6d %14.4f %12.4f %12.1f\n", r.e_max, std::string(to_string(r.strategy)).c_str(),
                    r.seeds.size(), r.infeasible, r.mean_sum_aot, r.mean_completion_time, r.runtime_ms);
    int unproven = 0;
    for (const auto& c : res.cells) unproven += c.status == CellStatus::Unproven ? 1 : 0;
    if (unproven > 0) std::fprintf(stderr, "warning: %d cells hit the node limit\n", unproven);
    if (has_summary_strategies(res.rows)) {
        std::printf("\n");
        print_summary(compare_summary(res.rows));
    }
    std::printf("\nwrote %s/per_seed.csv and %s/aggregate.csv\n", cfg.out_dir.c_str(), cfg.out_dir.c_str());
    return 0;
}

int cmd_summary(const std::string& dir) {
    const auto path = std::filesystem::path(dir) / "aggregate.csv";
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    const auto rows = read_aggregate_csv(in);
    const Summary s = compare_summary(rows);
    print_summary(s);
    std::ostringstream csv;
    write_summary(csv, s);
    detail::write_text(std::filesystem::path(dir) / "summary.csv", csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Age-of-task scheduling with partial offloading"};
    app.require_subcommand(1);

    InstanceSource src;
    SolveFlags solve_flags;
    ExperimentFlags exp_flags;
    std::string gen_out, summary_dir;

    auto* gen = app.add_subcommand("gen", "Write a generated instance in the key-value format");
    add_source(gen, src);
    gen->add_option("--out", gen_out, "Directory for instance_<seed>.txt (default: stdout)");

    auto* solve = app.add_subcommand("solve", "Solve one instance with one strategy");
    add_source(solve, src);
    add_solve_flags(solve, solve_flags);
    solve->add_option("--out", solve_flags.out, "Directory for age_trace.csv and schedule.csv");

    auto* trace = app.add_subcommand("trace", "Export the age trace and schedule of one solve");
    add_source(trace, src);
    add_solve_flags(trace, solve_flags);
    trace->add_option("--out", solve_flags.out, "Directory for age_trace.csv and schedule.csv (default: stdout)");

    auto* exp = app.add_subcommand("experiment", "Run the seed x budget x strategy grid");
    exp->add_option("--config", exp_flags.config_file, "Experiment config file");
    exp->add_option("--seed", exp_flags.seed, "Base seed");
    exp->add_option("--seeds", exp_flags.seeds, "Seed count N, list a,b,c or range a-b");
    exp->add_option("--emax-grid", exp_flags.emax_grid, "Budgets as a,b,c or lo:hi:step");
    exp->add_option("--strategy", exp_flags.strategies, "Comma-separated strategy names");
    exp->add_option("--horizon", exp_flags.horizon, "Schedule horizon T in slots");
    exp->add_option("--threads", exp_flags.threads, "Worker threads (default: all cores)");
    exp->add_option("--node-limit", solve_flags.node_limit, "Search node limit for the exact strategies");
    exp->add_option("--delay-objective", solve_flags.delay_objective, "makespan or sum")
        ->check(CLI::IsMember({"makespan", "sum"}));
    exp->add_option("--out", solve_flags.out, "Output directory (default: results)");

    auto* sum = app.add_subcommand("summary", "Headline gaps and ratios from an experiment directory");
    sum->add_option("dir", summary_dir, "Directory holding aggregate.csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*gen) return cmd_gen(src, gen_out);
        if (*solve) return cmd_solve(src, solve_flags, false);
        if (*trace) return cmd_solve(src, solve_flags, true);
        if (*exp) return cmd_experiment(exp_flags, solve_flags, exp);
        if (*sum) return cmd_summary(summary_dir);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
