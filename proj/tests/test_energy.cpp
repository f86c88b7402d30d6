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

#include <cmath>
#include <random>

#include "test_util.hpp"

namespace aotsched {
namespace {

using testing::flat_gains;
using testing::make_instance;

const EnergyParams kDefault{};

TEST(LocalEnergy, FrozenValues) {
    EXPECT_EQ(local_energy(0, kDefault), 0.0);
    EXPECT_NEAR(local_energy(100, kDefault), 1e-3, 1e-15);
    EXPECT_NEAR(local_energy(500, kDefault), 0.125, 1e-14);
    EXPECT_THROW(local_energy(-1, kDefault), std::invalid_argument);
}

TEST(OffloadEnergy, FrozenValues) {
    EXPECT_EQ(offload_energy(0, 1e-4, kDefault), 0.0);
    EXPECT_NEAR(offload_energy(500, 1e-4, kDefault), 0.125, 1e-14);
    EXPECT_NEAR(offload_energy(500, 2e-4, kDefault), 0.0625, 1e-14);
    EXPECT_THROW(offload_energy(10, 0.0, kDefault), std::invalid_argument);
}

TEST(OptimalSplit, SymmetricPoint) {
    // alpha h = lambda at h = 1e-4.
    const Split s = optimal_split(500, 1e-4, kDefault);
    EXPECT_NEAR(s.d_loc, 250.0, 1e-9);
    EXPECT_NEAR(s.d_off, 250.0, 1e-9);
    EXPECT_NEAR(slot_min_energy(500, 1e-4, kDefault), 0.03125, 1e-14);
    EXPECT_EQ(slot_min_energy(0, 1e-4, kDefault), 0.0);
}

TEST(OptimalSplit, WeakChannelStaysLocal) {
    const Split s = optimal_split(500, 1e-12, kDefault);
    EXPECT_GT(s.d_loc, 499.0);
    EXPECT_LT(s.d_off, 1.0);
}

TEST(OptimalSplit, BeatsGridAndSatisfiesFirstOrderCondition) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> size(1.0, 1000.0), log_gain(-7.0, -2.0);
    for (int i = 0; i < 200; ++i) {
        const double d = size(rng), h = std::pow(10.0, log_gain(rng));
        const Split s = optimal_split(d, h, kDefault);
        const double best = slot_energy(s.d_loc, s.d_off, h, kDefault);
        EXPECT_NEAR(best, slot_min_energy(d, h, kDefault), 1e-12 * best);
        for (int g = 0; g <= 2000; ++g) {
            const double x = d * g / 2000.0, y = d * (2000 - g) / 2000.0;
            ASSERT_GE(slot_energy(x, y, h, kDefault), best - 1e-9 * best);
        }
        // d/dx [alpha x^3 + lambda (d - x)^3 / h] vanishes at the split.
        const double step = 1e-5 * d;
        const double deriv = (slot_energy(s.d_loc + step, s.d_off - step, h, kDefault) -
                              slot_energy(s.d_loc - step, s.d_off + step, h, kDefault)) / (2 * step);
        const double scale = 3 * kDefault.alpha() * s.d_loc * s.d_loc;
        EXPECT_LT(std::abs(deriv), 1e-6 * scale);
    }
}

TEST(SlotMinEnergy, IncreasingAndConvex) {
    for (double h : {1e-5, 1e-4, 1e-3}) {
        double prev = -1, prev_diff = -1;
        for (int i = 0; i <= 200; ++i) {
            const double e = slot_min_energy(5.0 * i, h, kDefault);
            if (i > 0) {
                EXPECT_GT(e, prev);
                const double diff = e - prev;
                if (i > 1) {
                    EXPECT_GT(diff, prev_diff);
                }
                prev_diff = diff;
            }
            prev = e;
        }
    }
}

TEST(ClosedForms, RejectOtherOrders) {
    EnergyParams p;
    p.m = 2;
    EXPECT_THROW(optimal_split(10, 1e-4, p), UnsupportedOrderError);
    EXPECT_THROW(slot_min_energy(10, 1e-4, p), UnsupportedOrderError);
    std::vector<double> g{1e-4, 2e-4};
    EXPECT_THROW(partition_across_slots(10, g, p), UnsupportedOrderError);
    EXPECT_NO_THROW(partition_offload_only(10, g, p));
    EXPECT_NEAR(offload_energy(10, 1e-4, p), p.lambda() * 100 / 1e-4, 1e-18);
}

TEST(Partition, EqualGainsAndSingleSlot) {
    const std::vector<double> equal(4, 3e-4);
    for (double d : partition_across_slots(400, equal, kDefault)) EXPECT_NEAR(d, 100.0, 1e-9);
    const std::vector<double> one{7e-4};
    EXPECT_EQ(partition_across_slots(400, one, kDefault), std::vector<double>{400.0});
    EXPECT_EQ(partition_offload_only(400, one, kDefault), std::vector<double>{400.0});
}

TEST(Partition, TwoSlotGridOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> gain(1e-5, 1e-3), size(100, 800);
    for (int i = 0; i < 200; ++i) {
        const std::vector<double> g{gain(rng), gain(rng)};
        const double d = size(rng);
        const auto part = partition_across_slots(d, g, kDefault);
        const double best = slot_min_energy(part[0], g[0], kDefault) + slot_min_energy(part[1], g[1], kDefault);
        const auto off = partition_offload_only(d, g, kDefault);
        const double best_off = offload_energy(off[0], g[0], kDefault) + offload_energy(off[1], g[1], kDefault);
        for (int k = 0; k <= 4000; ++k) {
            const double x = d * k / 4000.0, y = d * (4000 - k) / 4000.0;
            ASSERT_GE(slot_min_energy(x, g[0], kDefault) + slot_min_energy(y, g[1], kDefault), best * (1 - 1e-12));
            ASSERT_GE(offload_energy(x, g[0], kDefault) + offload_energy(y, g[1], kDefault), best_off * (1 - 1e-12));
        }
    }
}

TEST(WindowEnergy, MatchesSumOfSlotMinima) {
    const Instance inst = generate_instance(9);
    const WindowEnergy joint(inst, OffloadMode::Joint);
    for (int first : {1, 5, 50}) {
        for (int count = 1; count <= 6; ++count) {
            const Task& t = inst.apps[0][0];
            const TaskPlan plan = plan_task_window(t, first, count, inst);
            EXPECT_NEAR(joint(t.size_bits, first, count), plan.energy, 1e-12 * plan.energy);
            const TaskPlan mec = plan_task_window(t, first, count, inst, OffloadMode::OffloadOnly);
            const WindowEnergy off(inst, OffloadMode::OffloadOnly);
            EXPECT_NEAR(off(t.size_bits, first, count), mec.energy, 1e-12 * mec.energy);
        }
    }
}

TEST(TaskPlan, EnergyConservation) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Instance inst = generate_instance(seed);
        for (const auto& tasks : inst.apps)
            for (const Task& t : tasks)
                for (auto mode : {OffloadMode::Joint, OffloadMode::OffloadOnly})
                    for (int s = 1; s <= 4; ++s) {
                        const TaskPlan plan = plan_task_window(t, 1 + static_cast<int>(seed), s, inst, mode);
                        double recomputed = 0.0, bits = 0.0;
                        for (int i = 0; i < s; ++i) {
                            const SlotPlan& sp = plan.per_slot[static_cast<std::size_t>(i)];
                            recomputed += slot_energy(sp.d_loc, sp.d_off, inst.channel.at(plan.start_slot + i), inst.params);
                            bits += sp.d_loc + sp.d_off;
                            EXPECT_GE(sp.d_loc, 0.0);
                            EXPECT_GE(sp.d_off, 0.0);
                        }
                        EXPECT_NEAR(recomputed, plan.energy, 1e-12 * plan.energy);
                        EXPECT_NEAR(bits, t.size_bits, kBitTolerance);
                    }
    }
}

TEST(MinSlotsPlan, OneSlotWhenBudgetSuffices) {
    const Instance inst = make_instance({{{500, 2}}}, flat_gains(10, 1e-4));
    const double one = slot_min_energy(500, 1e-4, inst.params);
    EXPECT_EQ(min_slots_plan(inst.apps[0][0], 1, one, inst).num_slots, 1);
    EXPECT_EQ(min_slots_plan(inst.apps[0][0], 1, 10 * one, inst).num_slots, 1);
}

TEST(MinSlotsPlan, TwoEqualSlotsJustBelow) {
    const Instance inst = make_instance({{{500, 2}}}, flat_gains(10, 1e-4));
    const double one = slot_min_energy(500, 1e-4, inst.params);
    const TaskPlan plan = min_slots_plan(inst.apps[0][0], 1, one * (1 - 1e-9), inst);
    ASSERT_EQ(plan.num_slots, 2);
    EXPECT_NEAR(plan.per_slot[0].d, 250.0, 1e-9);
    EXPECT_NEAR(plan.per_slot[1].d, 250.0, 1e-9);
    EXPECT_NEAR(plan.energy, one / 4, 1e-15);
}

TEST(MinSlotsPlan, MatchesBruteForceAndIsMonotone) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> budget_log(-4.0, -0.5);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Instance inst = generate_instance(seed);
        const Task& t = inst.apps[seed % 3][seed % 2];
        const int start = 1 + static_cast<int>(seed % 20);
        int prev = std::numeric_limits<int>::max();
        std::vector<double> budgets;
        for (int i = 0; i < 8; ++i) budgets.push_back(std::pow(10.0, budget_log(rng)));
        std::sort(budgets.begin(), budgets.end());
        for (double b : budgets) {
            int brute = -1;
            for (int s = 1; start + s - 1 <= inst.horizon; ++s) {
                double e = 0.0;
                const std::vector<double> g(inst.channel.gains.begin() + (start - 1),
                                            inst.channel.gains.begin() + (start - 1 + s));
                const auto part = partition_across_slots(t.size_bits, g, inst.params);
                for (int i = 0; i < s; ++i) e += slot_min_energy(part[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)], inst.params);
                if (e <= b) {
                    brute = s;
                    break;
                }
            }
            ASSERT_GT(brute, 0);
            const int got = min_slots_plan(t, start, b, inst).num_slots;
            EXPECT_EQ(got, brute);
            EXPECT_LE(got, prev);
            prev = got;
        }
    }
}

TEST(MinSlotsPlan, InfeasiblePastHorizon) {
    const Instance inst = make_instance({{{500, 2}}}, flat_gains(3, 1e-4));
    EXPECT_THROW(min_slots_plan(inst.apps[0][0], 1, 1e-9, inst), InfeasibleError);
    EXPECT_THROW(min_slots_plan(inst.apps[0][0], 1, 0.0, inst), std::invalid_argument);
}

} // namespace
} // namespace aotsched
