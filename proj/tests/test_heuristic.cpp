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

#include <algorithm>

#include "test_util.hpp"

namespace aotsched {
namespace {

using testing::flat_gains;
using testing::make_instance;

TEST(InitialAllocation, CubeProportional) {
    const Instance equal = make_instance({{{500, 1}, {500, 2}}, {{500, 3}}}, flat_gains(10, 1e-4), 0.3);
    for (const auto& [id, e] : initial_energy_allocation(equal).assigned) EXPECT_NEAR(e, 0.1, 1e-15);

    const Instance ratio = make_instance({{{600, 1}}, {{300, 2}}}, flat_gains(10, 1e-4), 0.09);
    const EnergyLedger l = initial_energy_allocation(ratio);
    EXPECT_NEAR(l.assigned.at({0, 0}) / l.assigned.at({1, 0}), 8.0, 1e-12);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = generate_instance(seed);
        EXPECT_NEAR(initial_energy_allocation(inst).total_assigned(), inst.e_max, 1e-12 * inst.e_max);
    }
}

TEST(DeltaScore, NonLastTask) {
    // Three active applications; the head of app 1 has a generation gap of 3
    // and a budget just short of one slot, so it needs two.
    const Instance inst = make_instance({{{500, 2}, {500, 5}}, {{500, 1}}, {{500, 3}}}, flat_gains(20, 1e-4));
    EnergyLedger ledger;
    for (const auto& tasks : inst.apps)
        for (const auto& t : tasks) ledger.assigned[t.id()] = 1.0;
    ledger.assigned[{0, 0}] = slot_min_energy(500, 1e-4, inst.params) * (1 - 1e-9);
    const GreedyState state = GreedyState::start(inst, ledger);
    const DeltaScore d = delta_score(state, 0, inst);
    EXPECT_EQ(d.s_nk, 2);
    EXPECT_DOUBLE_EQ(d.delta_r, 3.0);
    EXPECT_DOUBLE_EQ(d.delta_i, 6.0);
    EXPECT_DOUBLE_EQ(d.delta, -3.0);
}

TEST(DeltaScore, LastTaskResetsPlusOne) {
    const Instance inst = make_instance({{{500, 2}}, {{500, 1}}}, flat_gains(20, 1e-4));
    EnergyLedger ledger;
    ledger.assigned[{0, 0}] = slot_min_energy(500, 1e-4, inst.params) * (1 - 1e-9);
    ledger.assigned[{1, 0}] = 1.0;
    GreedyState state = GreedyState::start(inst, ledger);
    state.ages[0] = 10.0; // two slots of processing bring it to 12
    const DeltaScore d = delta_score(state, 0, inst);
    EXPECT_EQ(d.s_nk, 2);
    EXPECT_DOUBLE_EQ(d.delta_r, 13.0);
}

/// Age of `app` at the end of `slot` given how many of its tasks are done.
double age_at(const Instance& inst, int app, int done, int slot) {
    if (done == inst.num_tasks(app)) return 0.0;
    return inst.tau0 + slot - inst.task({app, done}).gen_time;
}

TEST(DeltaScore, MatchesSimulatedAgeChange) {
    // Re-derive each candidate's score from ages before and after its window:
    // every active application ages one unit per slot, and one slot after the
    // candidate completes its age sits lower than it would have without it.
    int rounds = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Instance inst = generate_instance(seed);
        GreedyState state = GreedyState::start(inst, initial_energy_allocation(inst));
        std::vector<int> done(inst.apps.size(), 0);
        const GreedyRun pass = greedy_pass(inst, initial_energy_allocation(inst));
        while (state.active_apps() > 0) {
            int best_app = -1;
            double best = 0.0;
            std::optional<TaskPlan> best_plan;
            for (int n = 0; n < inst.num_apps(); ++n) {
                if (state.exhausted[static_cast<std::size_t>(n)]) continue;
                const TaskId id = state.head(n);
                const TaskPlan plan = min_slots_plan(inst.task(id), state.current_slot, state.ledger.assigned.at(id), inst);
                const int before = state.current_slot - 1, end = plan.end_slot();
                double increment = 0.0;
                for (int m = 0; m < inst.num_apps(); ++m) {
                    const int d = done[static_cast<std::size_t>(m)];
                    if (d == inst.num_tasks(m)) continue;
                    // Window growth, measured on the not-yet-dropped sawtooth.
                    increment += (inst.tau0 + end - inst.task({m, d}).gen_time) -
                                 (inst.tau0 + before - inst.task({m, d}).gen_time);
                }
                const double without = inst.tau0 + end + 1 - inst.task(id).gen_time;
                const double with = age_at(inst, n, done[static_cast<std::size_t>(n)] + 1, end + 1);
                const double simulated = (without - with) - increment;
                const DeltaScore score = delta_score(state, n, inst);
                EXPECT_NEAR(score.delta, simulated, 1e-9) << "seed " << seed << " app " << n;
                if (best_app < 0 || simulated > best + 1e-12) {
                    best_app = n;
                    best = simulated;
                    best_plan = plan;
                }
            }
            EXPECT_EQ(pass.order[state.order.size()].app, best_app) << "seed " << seed;
            detail::advance(state, *best_plan, inst);
            ++done[static_cast<std::size_t>(best_app)];
            ++rounds;
        }
    }
    EXPECT_EQ(rounds, 60 * 9);
}

TEST(GreedyPass, SingleTaskIsItsMinSlotsPlan) {
    const Instance inst = make_instance({{{500, 2}}}, generate_instance(4).channel.gains, 0.01);
    const GreedyRun run = greedy_pass(inst, initial_energy_allocation(inst));
    const TaskPlan plan = min_slots_plan(inst.apps[0][0], 1, 0.01, inst);
    ASSERT_EQ(static_cast<int>(run.schedule.decisions.size()), plan.num_slots);
    for (int i = 0; i < plan.num_slots; ++i) {
        EXPECT_EQ(run.schedule.decisions[static_cast<std::size_t>(i)].slot, i + 1);
        EXPECT_DOUBLE_EQ(run.schedule.decisions[static_cast<std::size_t>(i)].d_loc, plan.per_slot[static_cast<std::size_t>(i)].d_loc);
    }
}

TEST(GreedyPass, DominantApplicationGoesFirst) {
    const Instance inst = make_instance({{{100, 1}, {100, 7}}, {{100, 6}, {100, 6.5}}}, flat_gains(20, 1e-4), 1.0);
    const GreedyRun run = greedy_pass(inst, initial_energy_allocation(inst));
    ASSERT_EQ(run.order.size(), 4u);
    EXPECT_EQ(run.order[0], (TaskId{0, 0}));
    EXPECT_EQ(run.order[1], (TaskId{0, 1}));
}

TEST(GreedyPass, TiesGoToLowestApplication) {
    const Instance inst = make_instance({{{100, 2}}, {{100, 2}}}, flat_gains(20, 1e-4), 1.0);
    EXPECT_EQ(greedy_pass(inst, initial_energy_allocation(inst)).order[0].app, 0);
}

TEST(Heuristic, ValidSchedulesWithinBudget) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Instance inst = generate_instance(seed);
        inst.e_max = 0.12 + 0.01 * static_cast<double>(seed % 7);
        const HeuristicReport rep = schedule_heuristic_report(inst);
        EXPECT_TRUE(check_schedule(inst, rep.result.schedule).empty()) << seed;
        EXPECT_LE(schedule_energy(inst, rep.result.schedule), inst.e_max + 1e-9) << seed;
        EXPECT_LE(rep.result.sum_aot, rep.phase1_sum_aot) << seed;
        EXPECT_DOUBLE_EQ(rep.result.sum_aot, sum_age(inst, rep.result.log));
        EXPECT_EQ(static_cast<int>(rep.candidate_sum_aot.size()), inst.total_tasks() + 1);

        HeuristicOptions independent;
        independent.redistribution = Redistribution::Independent;
        const HeuristicReport ind = schedule_heuristic_report(inst, independent);
        EXPECT_LE(ind.result.sum_aot, ind.phase1_sum_aot);
        EXPECT_TRUE(check_schedule(inst, ind.result.schedule).empty());
    }
}

TEST(Heuristic, NoSlackMeansPhaseOne) {
    // A budget so generous that every task already fits in one slot.
    Instance inst = generate_instance(3);
    inst.e_max = 100.0;
    const HeuristicReport rep = schedule_heuristic_report(inst);
    EXPECT_EQ(rep.result.completion_time, 9);
    EXPECT_EQ(rep.chosen, 0);
    EXPECT_DOUBLE_EQ(rep.result.sum_aot, rep.phase1_sum_aot);
}

TEST(Heuristic, PureFunctionOfInstance) {
    const Instance inst = generate_instance(17);
    const StrategyResult a = schedule_heuristic(inst), b = schedule_heuristic(inst);
    EXPECT_EQ(a.sum_aot, b.sum_aot);
    EXPECT_EQ(a.order, b.order);
    ASSERT_EQ(a.schedule.decisions.size(), b.schedule.decisions.size());
    for (std::size_t i = 0; i < a.schedule.decisions.size(); ++i)
        EXPECT_EQ(a.schedule.decisions[i].d_loc, b.schedule.decisions[i].d_loc);
}

TEST(Heuristic, OrderInvariantUnderSizeAndBudgetScaling) {
    // Doubling every size and multiplying E_max by 8 scales every window
    // energy and every budget by exactly 8, so no slot count can change.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Instance inst = generate_instance(seed);
        Instance scaled = inst;
        for (auto& tasks : scaled.apps)
            for (auto& t : tasks) t.size_bits *= 2.0;
        scaled.e_max *= 8.0;
        const GreedyRun a = greedy_pass(inst, initial_energy_allocation(inst));
        const GreedyRun b = greedy_pass(scaled, initial_energy_allocation(scaled));
        EXPECT_EQ(a.order, b.order) << seed;
        EXPECT_EQ(a.schedule.completion_slots, b.schedule.completion_slots) << seed;
    }
}

TEST(Heuristic, NeverBeatsAgeOptimal) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Instance inst = generate_instance(seed);
        const double heuristic = schedule_heuristic(inst).sum_aot;
        const OracleResult exact = solve_exact(inst, OracleMode::AgeOptimal);
        EXPECT_LE(exact.sum_aot, heuristic + 1e-9) << seed;
    }
}

TEST(Heuristic, InfeasibleBudget) {
    Instance inst = generate_instance(2, {});
    inst.e_max = 1e-9;
    inst.horizon = 20;
    inst.channel.gains.resize(20);
    EXPECT_THROW(schedule_heuristic(inst), InfeasibleError);
}

} // namespace
} // namespace aotsched
