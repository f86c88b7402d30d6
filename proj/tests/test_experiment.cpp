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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace aotsched {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("aotsched_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.count = 4;
    cfg.e_max_grid = {0.13, 0.16};
    cfg.strategies = {Strategy::Heuristic, Strategy::AgeOptimal, Strategy::DelayOptimal, Strategy::MecOnly};
    return cfg;
}

TEST(RunExperiment, MinimalRun) {
    ExperimentConfig cfg;
    cfg.count = 1;
    cfg.e_max_grid = {0.15};
    cfg.strategies = {Strategy::Heuristic};
    cfg.out_dir = scratch_dir("minimal").string();
    const ExperimentResult res = run_experiment(cfg);
    ASSERT_EQ(res.rows.size(), 1u);
    ASSERT_EQ(res.cells.size(), 1u);
    const std::string agg = slurp(fs::path(cfg.out_dir) / "aggregate.csv");
    EXPECT_EQ(std::count(agg.begin(), agg.end(), '\n'), 2);
    EXPECT_EQ(agg.rfind("e_max,strategy,seeds,infeasible,mean_sum_aot,mean_completion_time\n0.15,heuristic,1,0,", 0), 0u);
    EXPECT_DOUBLE_EQ(res.rows[0].mean_sum_aot, round_csv(schedule_heuristic(generate_instance(1)).sum_aot));
}

TEST(RunExperiment, ByteIdenticalAcrossThreadCounts) {
    ExperimentConfig a = tiny_config(), b = tiny_config();
    a.threads = 1;
    b.threads = 5;
    a.out_dir = scratch_dir("det_a").string();
    b.out_dir = scratch_dir("det_b").string();
    run_experiment(a);
    run_experiment(b);
    for (const char* f : {"per_seed.csv", "aggregate.csv"})
        EXPECT_EQ(slurp(fs::path(a.out_dir) / f), slurp(fs::path(b.out_dir) / f)) << f;
}

TEST(RunExperiment, AggregateRecomputableFromPerSeed) {
    ExperimentConfig cfg = tiny_config();
    cfg.out_dir = scratch_dir("recompute").string();
    const ExperimentResult res = run_experiment(cfg);
    std::ifstream per_seed(fs::path(cfg.out_dir) / "per_seed.csv");
    const std::vector<Cell> cells = read_per_seed_csv(per_seed);
    ASSERT_EQ(cells.size(), 2u * 4u * 4u);
    std::ostringstream again;
    write_aggregate_csv(again, aggregate(cells));
    EXPECT_EQ(again.str(), slurp(fs::path(cfg.out_dir) / "aggregate.csv"));

    for (const auto& row : res.rows) {
        double total = 0.0;
        for (double v : row.sum_aot) total += v;
        EXPECT_DOUBLE_EQ(row.mean_sum_aot, total / static_cast<double>(row.sum_aot.size()));
        EXPECT_EQ(row.seeds.size(), 4u);
    }
}

TEST(RunExperiment, InfeasibleCellsAreRecorded) {
    ExperimentConfig cfg;
    cfg.count = 2;
    cfg.gen.num_apps = 2;
    cfg.gen.tasks_per_app = 2;
    cfg.gen.horizon = 20;
    cfg.e_max_grid = {1e-6, 0.1};
    cfg.strategies = {Strategy::Heuristic, Strategy::AgeOptimal};
    const ExperimentResult res = run_experiment(cfg);
    ASSERT_EQ(res.rows.size(), 4u);
    EXPECT_EQ(res.rows[0].infeasible, 2);
    EXPECT_EQ(res.rows[1].infeasible, 2);
    EXPECT_TRUE(std::isnan(res.rows[0].mean_sum_aot));
    EXPECT_EQ(res.rows[2].infeasible, 0);
    std::ostringstream csv;
    write_per_seed_csv(csv, res.cells);
    EXPECT_NE(csv.str().find("1,1e-06,heuristic,infeasible,,\n"), std::string::npos);
}

TEST(RunExperiment, RejectsInvalidConfig) {
    ExperimentConfig cfg;
    cfg.count = 0;
    EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
    cfg = {};
    cfg.e_max_grid = {0.1, -0.1};
    EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
    cfg = {};
    cfg.strategies.clear();
    EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
}

TEST(RunExperiment, UnwritableOutput) {
    const fs::path blocker = scratch_dir("blocker");
    std::ofstream(blocker.string()) << "file";
    ExperimentConfig cfg;
    cfg.count = 1;
    cfg.e_max_grid = {0.15};
    cfg.strategies = {Strategy::Heuristic};
    cfg.out_dir = (blocker / "sub").string();
    EXPECT_THROW(run_experiment(cfg), IoError);
    fs::remove(blocker);
}

TEST(CompareSummary, IdenticalColumns) {
    std::vector<ComparisonRow> rows;
    for (double e : {0.12, 0.13})
        for (Strategy s : {Strategy::Heuristic, Strategy::AgeOptimal, Strategy::DelayOptimal}) {
            ComparisonRow r;
            r.e_max = e;
            r.strategy = s;
            r.mean_sum_aot = 100.0 * e;
            r.mean_completion_time = 1000.0 * e;
            rows.push_back(r);
        }
    const Summary s = compare_summary(rows);
    EXPECT_DOUBLE_EQ(s.aot_gap_delay_age, 0.0);
    EXPECT_DOUBLE_EQ(s.aot_gap_delay_heuristic, 0.0);
    EXPECT_DOUBLE_EQ(s.aot_ratio_age_heuristic, 1.0);
    EXPECT_DOUBLE_EQ(s.ct_gap_age_delay, 0.0);
    EXPECT_DOUBLE_EQ(s.ct_gap_heuristic_delay, 0.0);
    EXPECT_DOUBLE_EQ(s.ct_ratio_delay_heuristic, 1.0);

    rows.pop_back();
    rows.erase(rows.begin() + 2);
    EXPECT_THROW(compare_summary(rows), std::invalid_argument);
}

TEST(CompareSummary, ReadsBackAggregateFile) {
    ExperimentConfig cfg = tiny_config();
    const ExperimentResult res = run_experiment(cfg);
    std::stringstream csv;
    write_aggregate_csv(csv, res.rows);
    const Summary direct = compare_summary(res.rows);
    const Summary parsed = compare_summary(read_aggregate_csv(csv));
    EXPECT_NEAR(parsed.aot_gap_delay_age, direct.aot_gap_delay_age, 1e-9);
    EXPECT_NEAR(parsed.ct_ratio_delay_heuristic, direct.ct_ratio_delay_heuristic, 1e-12);
    EXPECT_GE(direct.aot_gap_delay_age, 0.0);
    EXPECT_LE(direct.aot_ratio_age_heuristic, 1.0);
}

TEST(ExportTrace, SingleTaskDropsOnceToZero) {
    GenerationConfig cfg;
    cfg.num_apps = 1;
    cfg.tasks_per_app = 1;
    const Instance inst = generate_instance(4, cfg);
    const TraceExport t = export_trace(inst, Strategy::Heuristic);
    ASSERT_EQ(t.traces.size(), 1u);
    const auto& ages = t.traces[0].ages;
    for (std::size_t i = 1; i < ages.size(); ++i) EXPECT_DOUBLE_EQ(ages[i], ages[i - 1] + 1.0);
    EXPECT_EQ(static_cast<int>(ages.size()), t.result.completion_time);
}

TEST(ExportTrace, FilesRoundTrip) {
    const Instance inst = generate_instance(12);
    for (Strategy st : kAllStrategies) {
        const TraceExport t = export_trace(inst, st);
        const fs::path dir = scratch_dir(std::string("trace_") + std::string(to_string(st)));
        write_trace_files(t, dir.string());
        std::ifstream sched(dir / "schedule.csv");
        const Schedule back = read_schedule_csv(sched, inst);
        EXPECT_TRUE(check_schedule(inst, back).empty()) << to_string(st);
        const std::string age = slurp(dir / "age_trace.csv");
        EXPECT_EQ(age.rfind("app,t,age\n", 0), 0u);
        EXPECT_EQ(std::count(age.begin(), age.end(), '\n'), 1 + 3 * t.result.completion_time);
    }
}

} // namespace
} // namespace aotsched
