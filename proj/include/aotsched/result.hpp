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

#pragma once

#include <string>
#include <vector>

#include "aotsched/aot.hpp"
#include "aotsched/energy.hpp"
#include "aotsched/model.hpp"

namespace aotsched {

/// Outcome of one strategy on one instance.
struct StrategyResult {
    std::string strategy;
    double sum_aot = 0.0;
    int completion_time = 0; // slot of the last completion
    Schedule schedule;
    CompletionLog log;
    EnergyLedger ledger;
    std::vector<TaskId> order; // tasks in processing order
    bool proven_optimal = false;
};

/// Appends a task plan to a schedule and records its completion slot.
inline void commit_plan(Schedule& sched, const TaskPlan& plan) {
    for (int i = 0; i < plan.num_slots; ++i) {
        const SlotPlan& sp = plan.per_slot[static_cast<std::size_t>(i)];
        sched.decisions.push_back({plan.start_slot + i, plan.task, sp.d_loc, sp.d_off});
    }
    sched.completion_slots[plan.task] = plan.end_slot();
}

} // namespace aotsched
