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

// Seed x budget x strategy sweeps.
//
// Every cell of the grid is independent, so cells run on a small worker pool
// and land in a preallocated slot; output order never depends on timing.
// Per-seed values are rounded to their CSV representation before averaging,
// which makes the aggregate file reproducible from the per-seed file alone.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "aotsched/aot.hpp"
#include "aotsched/generate.hpp"
#include "aotsched/io.hpp"
#include "aotsched/model.hpp"
#include "aotsched/strategy.hpp"

namespace aotsched {

inline std::vector<double> default_emax_grid() {
    std::vector<double> grid;
    for (int i = 12; i <= 18; ++i) grid.push_back(i / 100.0);
    return grid;
}

inline std::vector<Strategy> default_strategies() {
    return {Strategy::Heuristic, Strategy::AgeOptimal, Strategy::DelayOptimal, Strategy::MecOnly};
}

struct ExperimentConfig {
    std::vector<std::uint64_t> seeds; // explicit list; when empty, base_seed .. base_seed + count - 1
    std::uint64_t base_seed = 1;
    int count = 50;
    std::vector<double> e_max_grid = default_emax_grid();
    std::vector<Strategy> strategies = default_strategies();
    GenerationConfig gen;
    SolveOptions solve;
    int threads = 0; // 0 picks the hardware concurrency
    std::string out_dir;

    std::vector<std::uint64_t> seed_list() const {
        if (!seeds.empty()) return seeds;
        std::vector<std::uint64_t> out;
        for (int i = 0; i < count; ++i) out.push_back(base_seed + static_cast<std::uint64_t>(i));
        return out;
    }
};

inline void validate_experiment(const ExperimentConfig& cfg) {
    if (cfg.seeds.empty() && cfg.count < 1) throw std::invalid_argument("seed count must be at least 1");
    if (cfg.e_max_grid.empty()) throw std::invalid_argument("e_max grid is empty");
    for (double e : cfg.e_max_grid)
        if (!(e > 0) || !std::isfinite(e)) throw std::invalid_argument("e_max grid values must be positive");
    if (cfg.strategies.empty()) throw std::invalid_argument("at least one strategy is required");
    for (std::size_t i = 0; i < cfg.strategies.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (cfg.strategies[i] == cfg.strategies[j])
                throw std::invalid_argument("strategy '" + std::string(to_string(cfg.strategies[i])) + "' listed twice");
    if (cfg.threads < 0) throw std::invalid_argument("threads must be non-negative");
    validate_config(cfg.gen);
}

enum class CellStatus { Ok, Unproven, Infeasible };

inline const char* to_string(CellStatus s) {
    switch (s) {
    case CellStatus::Ok: return "ok";
    case CellStatus::Unproven: return "unproven";
    case CellStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

/// One (seed, e_max, strategy) outcome. Values are rounded to 12 significant
/// digits, exactly as they appear in per_seed.csv.
struct Cell {
    std::uint64_t seed = 0;
    double e_max = 0.0;
    Strategy strategy = Strategy::Heuristic;
    CellStatus status = CellStatus::Ok;
    double sum_aot = 0.0;
    int completion_time = 0;
    double runtime_ms = 0.0;

    bool feasible() const { return status != CellStatus::Infeasible; }
};

struct ComparisonRow {
    double e_max = 0.0;
    Strategy strategy = Strategy::Heuristic;
    double mean_sum_aot = 0.0;
    double mean_completion_time = 0.0;
    std::vector<std::uint64_t> seeds; // feasible seeds, in seed order
    std::vector<double> sum_aot;
    std::vector<int> completion_time;
    int infeasible = 0;
    double runtime_ms = 0.0; // summed over seeds; never written to CSV
};

struct ExperimentResult {
    std::vector<Cell> cells; // e_max-major, then strategy, then seed
    std::vector<ComparisonRow> rows;
};

inline double round_csv(double x) { return parse_double(format_csv(x), "value"); }

/// Averages cells into rows, preserving the order in which (e_max, strategy)
/// pairs first appear.
inline std::vector<ComparisonRow> aggregate(const std::vector<Cell>& cells) {
    std::vector<ComparisonRow> rows;
    for (const Cell& c : cells) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const ComparisonRow& r) { return r.e_max == c.e_max && r.strategy == c.strategy; });
        if (it == rows.end()) {
            rows.push_back({});
            it = rows.end() - 1;
            it->e_max = c.e_max;
            it->strategy = c.strategy;
        }
        it->runtime_ms += c.runtime_ms;
        if (!c.feasible()) {
            ++it->infeasible;
            continue;
        }
        it->seeds.push_back(c.seed);
        it->sum_aot.push_back(c.sum_aot);
        it->completion_time.push_back(c.completion_time);
    }
    for (auto& r : rows) {
        if (r.seeds.empty()) {
            r.mean_sum_aot = std::nan("");
            r.mean_completion_time = std::nan("");
            continue;
        }
        double a = 0.0, ct = 0.0;
        for (std::size_t i = 0; i < r.seeds.size(); ++i) {
            a += r.sum_aot[i];
            ct += r.completion_time[i];
        }
        r.mean_sum_aot = a / static_cast<double>(r.seeds.size());
        r.mean_completion_time = ct / static_cast<double>(r.seeds.size());
    }
    return rows;
}

inline Cell run_cell(const Instance& base, std::uint64_t seed, double e_max, Strategy strategy,
                     const SolveOptions& opts) {
    Instance inst = base;
    inst.e_max = e_max;
    Cell cell;
    cell.seed = seed;
    cell.e_max = e_max;
    cell.strategy = strategy;
    const auto start = std::chrono::steady_clock::now();
    try {
        const StrategyResult r = run_strategy(inst, strategy, opts);
        cell.sum_aot = round_csv(r.sum_aot);
        cell.completion_time = r.completion_time;
        const bool exact = strategy != Strategy::Heuristic;
        cell.status = exact && !r.proven_optimal ? CellStatus::Unproven : CellStatus::Ok;
    } catch (const InfeasibleError&) {
        cell.status = CellStatus::Infeasible;
    }
    cell.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cell;
}

inline void write_per_seed_csv(std::ostream& os, const std::vector<Cell>& cells) {
    os << "seed,e_max,strategy,status,sum_aot,completion_time\n";
    for (const Cell& c : cells) {
        os << c.seed << ',' << format_csv(c.e_max) << ',' << to_string(c.strategy) << ',' << to_string(c.status) << ',';
        if (c.feasible()) os << format_csv(c.sum_aot) << ',' << c.completion_time;
        else os << ',';
        os << '\n';
    }
}

inline void write_aggregate_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
    os << "e_max,strategy,seeds,infeasible,mean_sum_aot,mean_completion_time\n";
    for (const auto& r : rows) {
        os << format_csv(r.e_max) << ',' << to_string(r.strategy) << ',' << r.seeds.size() << ',' << r.infeasible << ',';
        if (r.seeds.empty()) os << ',';
        else os << format_csv(r.mean_sum_aot) << ',' << format_csv(r.mean_completion_time);
        os << '\n';
    }
}

namespace detail {

inline std::vector<std::string> csv_columns(const std::string& line) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    if (!line.empty() && line.back() == ',') cols.emplace_back();
    return cols;
}

inline Strategy strategy_from(const std::string& name) {
    auto s = parse_strategy(detail::trim(name));
    if (!s) throw ParseError("unknown strategy '" + name + "'");
    return *s;
}

} // namespace detail

inline std::vector<Cell> read_per_seed_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != "seed,e_max,strategy,status,sum_aot,completion_time")
        throw ParseError("per-seed CSV has an unexpected header");
    std::vector<Cell> cells;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        const auto cols = detail::csv_columns(line);
        if (cols.size() != 6) throw ParseError("per-seed CSV row has " + std::to_string(cols.size()) + " columns");
        Cell c;
        c.seed = parse_uint(cols[0], "seed");
        c.e_max = parse_double(cols[1], "e_max");
        c.strategy = detail::strategy_from(cols[2]);
        const std::string status(detail::trim(cols[3]));
        if (status == "ok") c.status = CellStatus::Ok;
        else if (status == "unproven") c.status = CellStatus::Unproven;
        else if (status == "infeasible") c.status = CellStatus::Infeasible;
        else throw ParseError("unknown cell status '" + status + "'");
        if (c.feasible()) {
            c.sum_aot = parse_double(cols[4], "sum_aot");
            c.completion_time = static_cast<int>(parse_int(cols[5], "completion_time"));
        }
        cells.push_back(c);
    }
    return cells;
}

/// Reads aggregate rows back; per-seed vectors stay empty.
inline std::vector<ComparisonRow> read_aggregate_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        detail::trim(line) != "e_max,strategy,seeds,infeasible,mean_sum_aot,mean_completion_time")
        throw ParseError("aggregate CSV has an unexpected header");
    std::vector<ComparisonRow> rows;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        const auto cols = detail::csv_columns(line);
        if (cols.size() != 6) throw ParseError("aggregate CSV row has " + std::to_string(cols.size()) + " columns");
        ComparisonRow r;
        r.e_max = parse_double(cols[0], "e_max");
        r.strategy = detail::strategy_from(cols[1]);
        const auto n = parse_int(cols[2], "seeds");
        r.infeasible = static_cast<int>(parse_int(cols[3], "infeasible"));
        if (n > 0) {
            r.mean_sum_aot = parse_double(cols[4], "mean_sum_aot");
            r.mean_completion_time = parse_double(cols[5], "mean_completion_time");
        } else {
            r.mean_sum_aot = r.mean_completion_time = std::nan("");
        }
        rows.push_back(r);
    }
    return rows;
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

} // namespace detail

/// Runs the whole grid. With a non-empty out_dir, writes per_seed.csv and
/// aggregate.csv there. Infeasible cells are recorded, never thrown.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate_experiment(cfg);
    const auto seeds = cfg.seed_list();

    std::vector<Instance> instances;
    instances.reserve(seeds.size());
    for (auto seed : seeds) instances.push_back(generate_instance(seed, cfg.gen));

    const std::size_t n_seeds = seeds.size();
    const std::size_t n_strat = cfg.strategies.size();
    const std::size_t total = cfg.e_max_grid.size() * n_strat * n_seeds;

    ExperimentResult result;
    result.cells.resize(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const std::size_t e = i / (n_strat * n_seeds);
            const std::size_t s = (i / n_seeds) % n_strat;
            const std::size_t k = i % n_seeds;
            try {
                result.cells[i] = run_cell(instances[k], seeds[k], cfg.e_max_grid[e], cfg.strategies[s], cfg.solve);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(total, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    result.rows = aggregate(result.cells);

    if (!cfg.out_dir.empty()) {
        const std::filesystem::path dir(cfg.out_dir);
        detail::ensure_dir(dir);
        std::ostringstream per_seed, agg;
        write_per_seed_csv(per_seed, result.cells);
        write_aggregate_csv(agg, result.rows);
        detail::write_text(dir / "per_seed.csv", per_seed.str());
        detail::write_text(dir / "aggregate.csv", agg.str());
    }
    return result;
}

/// Headline comparison across the whole budget grid. Each strategy's figure
/// is the mean of its per-budget means.
struct Summary {
    double aot_gap_delay_age = 0.0;
    double aot_gap_delay_heuristic = 0.0;
    double aot_ratio_age_heuristic = 0.0;
    double ct_gap_age_delay = 0.0;
    double ct_gap_heuristic_delay = 0.0;
    double ct_ratio_delay_heuristic = 0.0;
    std::vector<std::pair<Strategy, double>> mean_sum_aot;
    std::vector<std::pair<Strategy, double>> mean_completion_time;
};

inline Summary compare_summary(const std::vector<ComparisonRow>& rows) {
    auto grand_mean = [&](Strategy s, bool aot) {
        double total = 0.0;
        int n = 0;
        for (const auto& r : rows) {
            if (r.strategy != s) continue;
            const double v = aot ? r.mean_sum_aot : r.mean_completion_time;
            if (std::isnan(v)) continue;
            total += v;
            ++n;
        }
        if (n == 0) throw std::invalid_argument("summary needs feasible rows for strategy '" + std::string(to_string(s)) + "'");
        return total / n;
    };
    Summary s;
    const double a_h = grand_mean(Strategy::Heuristic, true);
    const double a_a = grand_mean(Strategy::AgeOptimal, true);
    const double a_d = grand_mean(Strategy::DelayOptimal, true);
    const double c_h = grand_mean(Strategy::Heuristic, false);
    const double c_a = grand_mean(Strategy::AgeOptimal, false);
    const double c_d = grand_mean(Strategy::DelayOptimal, false);
    s.aot_gap_delay_age = a_d - a_a;
    s.aot_gap_delay_heuristic = a_d - a_h;
    s.aot_ratio_age_heuristic = a_a / a_h;
    s.ct_gap_age_delay = c_a - c_d;
    s.ct_gap_heuristic_delay = c_h - c_d;
    s.ct_ratio_delay_heuristic = c_d / c_h;
    for (Strategy st : kAllStrategies) {
        const bool present = std::any_of(rows.begin(), rows.end(), [&](const ComparisonRow& r) { return r.strategy == st; });
        if (!present) continue;
        try {
            s.mean_sum_aot.emplace_back(st, grand_mean(st, true));
            s.mean_completion_time.emplace_back(st, grand_mean(st, false));
        } catch (const std::invalid_argument&) {
        }
    }
    return s;
}

inline void write_summary(std::ostream& os, const Summary& s) {
    os << "metric,value\n";
    os << "aot_gap_delay_minus_age," << format_csv(s.aot_gap_delay_age) << '\n';
    os << "aot_gap_delay_minus_heuristic," << format_csv(s.aot_gap_delay_heuristic) << '\n';
    os << "aot_ratio_age_over_heuristic," << format_csv(s.aot_ratio_age_heuristic) << '\n';
    os << "ct_gap_age_minus_delay," << format_csv(s.ct_gap_age_delay) << '\n';
    os << "ct_gap_heuristic_minus_delay," << format_csv(s.ct_gap_heuristic_delay) << '\n';
    os << "ct_ratio_delay_over_heuristic," << format_csv(s.ct_ratio_delay_heuristic) << '\n';
    for (const auto& [st, v] : s.mean_sum_aot) os << "mean_sum_aot_" << to_string(st) << ',' << format_csv(v) << '\n';
    for (const auto& [st, v] : s.mean_completion_time)
        os << "mean_completion_time_" << to_string(st) << ',' << format_csv(v) << '\n';
}

/// Schedule and age traces of one strategy on one instance.
struct TraceExport {
    StrategyResult result;
    std::vector<AgeTrace> traces;
    std::string age_csv;
    std::string schedule_csv;
};

inline TraceExport export_trace(const Instance& inst, Strategy strategy, const SolveOptions& opts = {}) {
    TraceExport out;
    out.result = run_strategy(inst, strategy, opts);
    for (int n = 0; n < inst.num_apps(); ++n) out.traces.push_back(age_trace(inst, out.result.log, n));
    std::ostringstream age, sched;
    write_age_csv(age, out.traces, out.result.completion_time);
    write_schedule_csv(sched, inst, out.result.schedule);
    out.age_csv = age.str();
    out.schedule_csv = sched.str();
    return out;
}

inline void write_trace_files(const TraceExport& t, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    detail::ensure_dir(dir);
    detail::write_text(dir / "age_trace.csv", t.age_csv);
    detail::write_text(dir / "schedule.csv", t.schedule_csv);
}

// Experiment configs use the instance key-value format.

inline void write_experiment_config(std::ostream& os, const ExperimentConfig& cfg) {
    os << "# aotsched experiment\n";
    if (!cfg.seeds.empty()) {
        os << "seeds =";
        for (auto s : cfg.seeds) os << ' ' << s;
        os << '\n';
    } else {
        os << "base_seed = " << cfg.base_seed << "\ncount = " << cfg.count << '\n';
    }
    os << "emax_grid =";
    for (double e : cfg.e_max_grid) os << ' ' << format_exact(e);
    os << "\nstrategies =";
    for (auto s : cfg.strategies) os << ' ' << to_string(s);
    os << "\nnode_limit = " << cfg.solve.node_limit << '\n';
    os << "delay_objective = " << (cfg.solve.delay_objective == DelayObjective::Makespan ? "makespan" : "sum") << '\n';
    os << "threads = " << cfg.threads << '\n';
    if (!cfg.out_dir.empty()) os << "out = " << cfg.out_dir << '\n';
    const auto& g = cfg.gen;
    os << "gen.num_apps = " << g.num_apps << "\ngen.tasks_per_app = " << g.tasks_per_app << '\n';
    os << "gen.gen_min = " << format_exact(g.gen_min) << "\ngen.gen_max = " << format_exact(g.gen_max) << '\n';
    os << "gen.tau0 = " << format_exact(g.tau0) << '\n';
    os << "gen.size_min = " << format_exact(g.size_min) << "\ngen.size_max = " << format_exact(g.size_max) << '\n';
    os << "gen.gain_min = " << format_exact(g.gain_min) << "\ngen.gain_max = " << format_exact(g.gain_max) << '\n';
    os << "gen.horizon = " << g.horizon << '\n';
    os << "gen.gamma = " << format_exact(g.params.gamma) << "\ngen.omega = " << format_exact(g.params.omega) << '\n';
    os << "gen.tau = " << format_exact(g.params.tau) << "\ngen.lambda0 = " << format_exact(g.params.lambda0) << '\n';
    os << "gen.m = " << g.params.m << '\n';
}

inline DelayObjective parse_delay_objective(std::string_view name) {
    if (name == "makespan") return DelayObjective::Makespan;
    if (name == "sum") return DelayObjective::SumCompletion;
    throw std::invalid_argument("delay objective must be 'makespan' or 'sum', got '" + std::string(name) + "'");
}

inline std::vector<Strategy> parse_strategy_list(std::string_view text) {
    std::vector<Strategy> out;
    for (const auto& name : split_fields(text)) {
        auto s = parse_strategy(name);
        if (!s) throw std::invalid_argument("unknown strategy '" + name + "'");
        out.push_back(*s);
    }
    return out;
}

/// Accepts "a,b,c" (or space separated) and "lo:hi:step". Range points are
/// rounded to 12 significant digits so 0.12:0.18:0.01 yields the decimals.
inline std::vector<double> parse_emax_grid(std::string_view text) {
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split_fields(text, ":");
        if (parts.size() != 3) throw ParseError("e_max range must be 'lo:hi:step'");
        const double lo = parse_double(parts[0], "e_max range"), hi = parse_double(parts[1], "e_max range");
        const double step = parse_double(parts[2], "e_max range");
        if (!(step > 0) || !(hi >= lo)) throw std::invalid_argument("e_max range needs lo <= hi and step > 0");
        const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
        if (n > 10000) throw std::invalid_argument("e_max range has too many points");
        std::vector<double> out;
        for (long long i = 0; i < n; ++i) out.push_back(round_csv(lo + static_cast<double>(i) * step));
        return out;
    }
    std::vector<double> out;
    for (const auto& f : split_fields(text)) out.push_back(parse_double(f, "e_max grid"));
    return out;
}

/// "N" is a count from base_seed; "a,b,c" is an explicit list; "a-b" is an
/// inclusive range.
inline void apply_seed_spec(ExperimentConfig& cfg, std::string_view text) {
    const auto fields = split_fields(text);
    if (fields.size() == 1 && fields[0].find('-') != std::string::npos) {
        const auto parts = split_fields(fields[0], "-");
        if (parts.size() != 2) throw ParseError("seed range must be 'a-b'");
        const auto a = parse_uint(parts[0], "seed range"), b = parse_uint(parts[1], "seed range");
        if (b < a || b - a >= 1'000'000) throw std::invalid_argument("seed range invalid");
        cfg.seeds.clear();
        for (auto s = a; s <= b; ++s) cfg.seeds.push_back(s);
        return;
    }
    if (fields.size() == 1) {
        const auto n = parse_int(fields[0], "seed count");
        if (n < 1 || n > 1'000'000) throw std::invalid_argument("seed count must lie in [1, 1000000]");
        cfg.seeds.clear();
        cfg.count = static_cast<int>(n);
        return;
    }
    if (fields.empty()) throw ParseError("empty seed list");
    cfg.seeds.clear();
    for (const auto& f : fields) cfg.seeds.push_back(parse_uint(f, "seed"));
}

inline ExperimentConfig read_experiment_config(std::istream& in) {
    const KeyValueDoc doc = KeyValueDoc::parse(in);
    ExperimentConfig cfg;
    if (doc.has("seeds")) {
        cfg.seeds.clear();
        for (const auto& f : split_fields(doc.get("seeds"))) cfg.seeds.push_back(parse_uint(f, "seeds"));
        if (cfg.seeds.empty()) throw ParseError("seeds is empty");
    }
    if (doc.has("base_seed")) cfg.base_seed = parse_uint(doc.get("base_seed"), "base_seed");
    if (doc.has("count")) cfg.count = static_cast<int>(doc.get_int("count"));
    if (doc.has("emax_grid")) cfg.e_max_grid = parse_emax_grid(doc.get("emax_grid"));
    if (doc.has("strategies")) cfg.strategies = parse_strategy_list(doc.get("strategies"));
    if (doc.has("node_limit")) cfg.solve.node_limit = parse_uint(doc.get("node_limit"), "node_limit");
    if (doc.has("delay_objective")) cfg.solve.delay_objective = parse_delay_objective(doc.get("delay_objective"));
    if (doc.has("threads")) cfg.threads = static_cast<int>(doc.get_int("threads"));
    if (doc.has("out")) cfg.out_dir = doc.get("out");
    auto& g = cfg.gen;
    auto num = [&](const char* key, double& field) {
        if (doc.has(key)) field = doc.get_double(key);
    };
    auto whole = [&](const char* key, int& field) {
        if (doc.has(key)) field = static_cast<int>(doc.get_int(key));
    };
    whole("gen.num_apps", g.num_apps);
    whole("gen.tasks_per_app", g.tasks_per_app);
    num("gen.gen_min", g.gen_min);
    num("gen.gen_max", g.gen_max);
    num("gen.tau0", g.tau0);
    num("gen.size_min", g.size_min);
    num("gen.size_max", g.size_max);
    num("gen.gain_min", g.gain_min);
    num("gen.gain_max", g.gain_max);
    whole("gen.horizon", g.horizon);
    num("gen.gamma", g.params.gamma);
    num("gen.omega", g.params.omega);
    num("gen.tau", g.params.tau);
    num("gen.lambda0", g.params.lambda0);
    whole("gen.m", g.params.m);
    doc.require_all_used();
    validate_experiment(cfg);
    return cfg;
}

inline ExperimentConfig read_experiment_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return read_experiment_config(in);
}

} // namespace aotsched
