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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aotsched/model.hpp"

namespace aotsched {

enum class ViolationKind {
    MultipleTasksInSlot, // more than one task selected in a slot
    FcfsOrder,           // task started before its predecessor completed
    Preemption,          // an unfinished task lost its slot
    OverProcessed,       // more bits processed than remain
    IdleProcessing,      // bits processed in a slot with no task
    NegativeVolume,
    SlotOutOfRange,
    UnknownTask,
    Incomplete,
    CompletionMismatch, // recorded completion slot disagrees with the replay
};

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::MultipleTasksInSlot: return "multiple-tasks-in-slot";
    case ViolationKind::FcfsOrder: return "fcfs-order";
    case ViolationKind::Preemption: return "preemption";
    case ViolationKind::OverProcessed: return "over-processed";
    case ViolationKind::IdleProcessing: return "idle-processing";
    case ViolationKind::NegativeVolume: return "negative-volume";
    case ViolationKind::SlotOutOfRange: return "slot-out-of-range";
    case ViolationKind::UnknownTask: return "unknown-task";
    case ViolationKind::Incomplete: return "incomplete";
    case ViolationKind::CompletionMismatch: return "completion-mismatch";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    int slot = 0;
    std::optional<TaskId> task;
    std::string message;
};

/// Replays the schedule slot by slot, subtracting processed bits from each
/// task's remaining size, and reports every broken scheduling rule.
///
/// Slots absent from the decision list are idle. Decisions need not be sorted.
inline std::vector<Violation> check_schedule(const Instance& inst, const Schedule& sched) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, int slot, std::optional<TaskId> task, std::string msg) {
        out.push_back({kind, slot, task, std::move(msg)});
    };

    std::map<int, std::vector<const SlotDecision*>> by_slot;
    for (const auto& d : sched.decisions) {
        if (d.slot < 1 || d.slot > inst.horizon) {
            report(ViolationKind::SlotOutOfRange, d.slot, d.task,
                   "slot " + std::to_string(d.slot) + " outside 1.." + std::to_string(inst.horizon));
            continue;
        }
        if (d.d_loc < 0 || d.d_off < 0) {
            report(ViolationKind::NegativeVolume, d.slot, d.task, "negative volume in slot " + std::to_string(d.slot));
        }
        if (!d.task) {
            if (d.d_loc != 0 || d.d_off != 0)
                report(ViolationKind::IdleProcessing, d.slot, std::nullopt,
                       "bits processed in idle slot " + std::to_string(d.slot));
            continue;
        }
        const TaskId id = *d.task;
        if (id.app < 0 || id.app >= inst.num_apps() || id.index < 0 || id.index >= inst.num_tasks(id.app)) {
            report(ViolationKind::UnknownTask, d.slot, id, "unknown task " + id.str());
            continue;
        }
        by_slot[d.slot].push_back(&d);
    }

    std::vector<std::vector<double>> remaining(inst.apps.size());
    for (std::size_t n = 0; n < inst.apps.size(); ++n)
        for (const auto& t : inst.apps[n]) remaining[n].push_back(t.size_bits);
    std::vector<int> next(inst.apps.size(), 0); // first unfinished task per application
    std::map<TaskId, int> completed;
    std::optional<TaskId> active; // started but unfinished

    auto rem = [&](TaskId id) -> double& {
        return remaining[static_cast<std::size_t>(id.app)][static_cast<std::size_t>(id.index)];
    };

    int prev_slot = 0;
    for (const auto& [slot, decisions] : by_slot) {
        if (active && slot > prev_slot + 1) {
            report(ViolationKind::Preemption, prev_slot + 1, active,
                   "task " + active->str() + " unfinished but slot " + std::to_string(prev_slot + 1) + " idle");
        }
        if (decisions.size() > 1) {
            report(ViolationKind::MultipleTasksInSlot, slot, decisions[1]->task,
                   std::to_string(decisions.size()) + " tasks selected in slot " + std::to_string(slot));
        }
        for (const SlotDecision* d : decisions) {
            const TaskId id = *d->task;
            if (active && *active != id) {
                report(ViolationKind::Preemption, slot, active,
                       "task " + active->str() + " preempted by " + id.str() + " in slot " + std::to_string(slot));
            }
            if (id.index > next[static_cast<std::size_t>(id.app)]) {
                report(ViolationKind::FcfsOrder, slot, id,
                       "task " + id.str() + " processed before its predecessor completed");
            }
            double& r = rem(id);
            const double volume = d->d_loc + d->d_off;
            if (volume > r + kBitTolerance) {
                report(ViolationKind::OverProcessed, slot, id,
                       "task " + id.str() + " processes " + std::to_string(volume) + " bits with " +
                           std::to_string(r) + " remaining");
            }
            const bool was_done = completed.contains(id);
            r -= volume;
            if (!was_done && r <= kBitTolerance) {
                completed[id] = slot;
                if (id.index == next[static_cast<std::size_t>(id.app)]) ++next[static_cast<std::size_t>(id.app)];
                if (active == id) active.reset();
            } else if (!was_done) {
                active = id;
            }
        }
        prev_slot = slot;
    }
    if (active) {
        report(ViolationKind::Preemption, prev_slot + 1, active, "task " + active->str() + " abandoned unfinished");
    }

    for (int n = 0; n < inst.num_apps(); ++n) {
        for (int k = 0; k < inst.num_tasks(n); ++k) {
            const TaskId id{n, k};
            if (!completed.contains(id)) {
                report(ViolationKind::Incomplete, 0, id, "task " + id.str() + " incomplete");
                continue;
            }
            auto it = sched.completion_slots.find(id);
            if (it != sched.completion_slots.end() && it->second != completed[id]) {
                report(ViolationKind::CompletionMismatch, it->second, id,
                       "task " + id.str() + " recorded complete in slot " + std::to_string(it->second) +
                           " but replay completes it in slot " + std::to_string(completed[id]));
            }
        }
    }
    return out;
}

inline bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
    return std::any_of(vs.begin(), vs.end(), [kind](const Violation& v) { return v.kind == kind; });
}

} // namespace aotsched
