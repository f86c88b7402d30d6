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

// Greedy age-based scheduler.
//
// Each round scores the head task of every application by the net change in
// sum age from running it next: the age drop it produces minus the waiting it
// imposes on every application that still has work. The best head runs with
// the fewest slots its energy budget allows. Budgets start proportional to the
// cube of the task size; a second phase hands all leftover energy to one task
// at a time, replays the phase-one order, and keeps the best run.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aotsched/aot.hpp"
#include "aotsched/energy.hpp"
#include "aotsched/model.hpp"
#include "aotsched/result.hpp"

namespace aotsched {

struct DeltaScore {
    int app = 0;
    double delta_r = 0.0; // age reduction from completing the task
    double delta_i = 0.0; // age increment from waiting during its slots
    double delta = 0.0;
    int s_nk = 1;
};

struct GreedyState {
    int current_slot = 1; // first free slot
    std::vector<int> next_task;
    std::vector<bool> exhausted;
    std::vector<TaskId> order;
    EnergyLedger ledger;
    std::vector<double> ages; // a_n at the end of slot current_slot - 1

    static GreedyState start(const Instance& inst, EnergyLedger ledger) {
        GreedyState s;
        const auto n = inst.apps.size();
        s.next_task.assign(n, 0);
        s.exhausted.assign(n, false);
        s.ledger = std::move(ledger);
        for (const auto& tasks : inst.apps) s.ages.push_back(inst.tau0 - tasks.front().gen_time);
        return s;
    }

    int active_apps() const {
        int count = 0;
        for (bool e : exhausted) count += e ? 0 : 1;
        return count;
    }

    TaskId head(int app) const { return {app, next_task[static_cast<std::size_t>(app)]}; }
};

/// Budgets proportional to the cube of each task's size, summing to e_max.
inline EnergyLedger initial_energy_allocation(const Instance& inst) {
    double cube_sum = 0.0;
    for (const auto& tasks : inst.apps)
        for (const auto& t : tasks) cube_sum += t.size_bits * t.size_bits * t.size_bits;
    EnergyLedger ledger;
    for (const auto& tasks : inst.apps)
        for (const auto& t : tasks) ledger.assigned[t.id()] = t.size_bits * t.size_bits * t.size_bits / cube_sum * inst.e_max;
    return ledger;
}

namespace detail {

inline std::pair<DeltaScore, TaskPlan> score_candidate(const GreedyState& state, int app, const Instance& inst) {
    if (state.exhausted.at(static_cast<std::size_t>(app)))
        throw std::invalid_argument("application " + std::to_string(app + 1) + " has no tasks left");
    const TaskId id = state.head(app);
    const double budget = state.ledger.assigned.at(id);
    TaskPlan plan = min_slots_plan(inst.task(id), state.current_slot, budget, inst);

    DeltaScore score;
    score.app = app;
    score.s_nk = plan.num_slots;
    if (!inst.is_last(id)) {
        score.delta_r = inst.task({app, id.index + 1}).gen_time - inst.task(id).gen_time;
    } else {
        // The age at the completion slot plus the one it would have gained next.
        const double age_at_completion = state.ages[static_cast<std::size_t>(app)] + plan.num_slots;
        score.delta_r = age_at_completion + 1.0;
    }
    score.delta_i = static_cast<double>(plan.num_slots) * state.active_apps();
    score.delta = score.delta_r - score.delta_i;
    return {score, std::move(plan)};
}

/// Commits a plan to the state: ages advance over its slots and the owning
/// application's age drops at completion.
inline void advance(GreedyState& state, const TaskPlan& plan, const Instance& inst) {
    const int app = plan.task.app;
    for (std::size_t n = 0; n < state.ages.size(); ++n)
        if (!state.exhausted[n]) state.ages[n] += plan.num_slots;
    state.ledger.consumed[plan.task] = plan.energy;
    state.order.push_back(plan.task);
    state.current_slot = plan.end_slot() + 1;
    auto& next = state.next_task[static_cast<std::size_t>(app)];
    if (inst.is_last(plan.task)) {
        state.exhausted[static_cast<std::size_t>(app)] = true;
        state.ages[static_cast<std::size_t>(app)] = 0.0;
    } else {
        ++next;
        state.ages[static_cast<std::size_t>(app)] = inst.tau0 + plan.end_slot() - inst.task({app, next}).gen_time;
    }
}

} // namespace detail

inline DeltaScore delta_score(const GreedyState& state, int app, const Instance& inst) {
    return detail::score_candidate(state, app, inst).first;
}

struct GreedyRun {
    Schedule schedule;
    CompletionLog log;
    EnergyLedger ledger;
    std::vector<TaskId> order;
    double sum_aot = 0.0;
};

/// Runs the greedy loop under the budgets in `ledger.assigned`. With
/// `fixed_order` (application index per step) the selection is replayed
/// instead of scored.
inline GreedyRun greedy_pass(const Instance& inst, const EnergyLedger& ledger,
                             std::optional<std::span<const int>> fixed_order = std::nullopt) {
    if (fixed_order && static_cast<int>(fixed_order->size()) != inst.total_tasks())
        throw std::invalid_argument("fixed order must list every task exactly once");
    for (const auto& tasks : inst.apps)
        for (const auto& t : tasks) {
            auto it = ledger.assigned.find(t.id());
            if (it == ledger.assigned.end() || !(it->second > 0))
                throw std::invalid_argument("task " + t.id().str() + " has no positive budget");
        }

    GreedyState state = GreedyState::start(inst, ledger);
    state.ledger.consumed.clear();
    GreedyRun run;
    std::size_t step = 0;
    while (state.active_apps() > 0) {
        std::optional<std::pair<DeltaScore, TaskPlan>> best;
        if (fixed_order) {
            const int app = (*fixed_order)[step];
            if (app < 0 || app >= inst.num_apps() || state.exhausted[static_cast<std::size_t>(app)])
                throw std::invalid_argument("fixed order selects an exhausted application");
            best = detail::score_candidate(state, app, inst); // infeasibility propagates
        } else {
            std::string skipped;
            for (int n = 0; n < inst.num_apps(); ++n) {
                if (state.exhausted[static_cast<std::size_t>(n)]) continue;
                try {
                    auto cand = detail::score_candidate(state, n, inst);
                    if (!best || cand.first.delta > best->first.delta) best = std::move(cand);
                } catch (const InfeasibleError& e) {
                    skipped += std::string("\n  ") + e.what();
                }
            }
            if (!best)
                throw InfeasibleError("no remaining task fits its budget from slot " +
                                      std::to_string(state.current_slot) + ":" + skipped);
        }
        commit_plan(run.schedule, best->second);
        detail::advance(state, best->second, inst);
        ++step;
    }
    run.ledger = std::move(state.ledger);
    run.order = std::move(state.order);
    run.log = CompletionLog::from_schedule(inst, run.schedule);
    run.sum_aot = sum_age(inst, run.log);
    return run;
}

/// How leftover energy is handed back in the second phase.
enum class Redistribution {
    Independent, // each rerun starts from the phase-one consumption
    Chained,     // each rerun starts from the previous rerun's consumption
};

struct HeuristicOptions {
    Redistribution redistribution = Redistribution::Chained;
};

struct HeuristicReport {
    StrategyResult result;
    double phase1_sum_aot = 0.0;
    std::vector<double> candidate_sum_aot; // phase 1 first, then one per rerun; NaN if a rerun was infeasible
    int chosen = 0;                        // index into candidate_sum_aot
};

inline HeuristicReport schedule_heuristic_report(const Instance& inst, const HeuristicOptions& opts = {}) {
    require_valid(inst);
    GreedyRun best = greedy_pass(inst, initial_energy_allocation(inst));

    HeuristicReport report;
    report.phase1_sum_aot = best.sum_aot;
    report.candidate_sum_aot.push_back(best.sum_aot);

    std::vector<int> apps;
    for (const auto& id : best.order) apps.push_back(id.app);
    const std::vector<TaskId> order = best.order;
    std::map<TaskId, double> base = best.ledger.consumed;

    for (std::size_t j = 0; j < order.size(); ++j) {
        EnergyLedger budgets;
        budgets.assigned = base;
        double used = 0.0;
        for (const auto& [id, e] : base) used += e;
        budgets.assigned[order[j]] += std::max(0.0, inst.e_max - used);
        try {
            GreedyRun rerun = greedy_pass(inst, budgets, std::span<const int>(apps));
            report.candidate_sum_aot.push_back(rerun.sum_aot);
            if (opts.redistribution == Redistribution::Chained) base = rerun.ledger.consumed;
            if (rerun.sum_aot < best.sum_aot) {
                best = std::move(rerun);
                report.chosen = static_cast<int>(j) + 1;
            }
        } catch (const InfeasibleError&) {
            report.candidate_sum_aot.push_back(std::nan(""));
        }
    }

    StrategyResult& r = report.result;
    r.strategy = "heuristic";
    r.sum_aot = best.sum_aot;
    r.completion_time = best.schedule.completion_time();
    r.schedule = std::move(best.schedule);
    r.log = std::move(best.log);
    r.ledger = std::move(best.ledger);
    r.order = std::move(best.order);
    return report;
}

inline StrategyResult schedule_heuristic(const Instance& inst) { return schedule_heuristic_report(inst).result; }

} // namespace aotsched
