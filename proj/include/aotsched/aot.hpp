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

// Age of task: the time elapsed since the generation of the oldest
// unprocessed task of an application, sampled at the end of each slot.
//
// Slot t (one-based) ends at absolute time tau0 + t. With j(t) the first task
// of application n not completed before slot t, the instantaneous age is
//
//   a_n(t) = tau0 + t - gen_time(n, j(t)),   t = 1 .. c_K,
//
// where c_k is the slot in which task k completes; the age is zero afterwards.
// Equivalently a_n(0) = tau0 - gen_time(n, 1), the age grows by one per slot,
// and drops to tau0 + t - gen_time(n, k + 1) when task k completed in slot t - 1.

#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aotsched/model.hpp"

namespace aotsched {

/// Per application, (task index, absolute completion time) in FCFS order.
struct CompletionLog {
    std::vector<std::vector<std::pair<int, double>>> per_app;

    /// Builds the log from the completion slots recorded in a schedule.
    static CompletionLog from_schedule(const Instance& inst, const Schedule& sched) {
        CompletionLog log;
        log.per_app.resize(inst.apps.size());
        for (const auto& [id, slot] : sched.completion_slots) {
            log.per_app.at(static_cast<std::size_t>(id.app)).emplace_back(id.index, inst.tau0 + slot);
        }
        return log;
    }
};

struct AgeTrace {
    int app = 0;
    std::vector<double> ages; // a_n(1) .. a_n(c_K)
    double overall = 0.0;
};

namespace detail {

/// Completion slots c_k = tau' - tau0 for app n, validated against the instance.
inline std::vector<int> completion_slots(const Instance& inst, const CompletionLog& log, int app) {
    if (app < 0 || app >= inst.num_apps()) throw std::invalid_argument("unknown application " + std::to_string(app + 1));
    if (log.per_app.size() != inst.apps.size())
        throw std::invalid_argument("completion log covers " + std::to_string(log.per_app.size()) + " of " +
                                    std::to_string(inst.apps.size()) + " applications");
    const auto& entries = log.per_app[static_cast<std::size_t>(app)];
    const int k_n = inst.num_tasks(app);
    if (static_cast<int>(entries.size()) != k_n)
        throw std::invalid_argument("completion log for application " + std::to_string(app + 1) + " has " +
                                    std::to_string(entries.size()) + " of " + std::to_string(k_n) + " tasks");
    std::vector<int> slots;
    slots.reserve(entries.size());
    for (int k = 0; k < k_n; ++k) {
        const auto& [index, done] = entries[static_cast<std::size_t>(k)];
        const TaskId id{app, k};
        if (index != k) throw std::invalid_argument("completion log misses task " + id.str());
        if (done <= inst.task(id).gen_time) throw std::invalid_argument("task " + id.str() + " completes before generation");
        const double offset = done - inst.tau0;
        const double rounded = std::round(offset);
        if (rounded < 1 || std::abs(offset - rounded) > 1e-9)
            throw std::invalid_argument("task " + id.str() + " completion time is not a slot end after tau0");
        const int c = static_cast<int>(rounded);
        if (!slots.empty() && c <= slots.back())
            throw std::invalid_argument("completion times of application " + std::to_string(app + 1) +
                                        " not strictly increasing");
        slots.push_back(c);
    }
    return slots;
}

} // namespace detail

/// Step-by-step age evolution of one application, summed slot by slot.
inline AgeTrace age_trace(const Instance& inst, const CompletionLog& log, int app) {
    const std::vector<int> done = detail::completion_slots(inst, log, app);
    const auto& tasks = inst.apps[static_cast<std::size_t>(app)];

    AgeTrace trace;
    trace.app = app;
    double age = inst.tau0 - tasks.front().gen_time;
    std::size_t head = 0;
    for (int t = 1; t <= done.back(); ++t) {
        if (head > 0 && done[head - 1] == t - 1) {
            age = inst.tau0 + t - tasks[head].gen_time;
        } else {
            age += 1.0;
        }
        trace.ages.push_back(age);
        if (done[head] == t) ++head;
    }
    for (double a : trace.ages) trace.overall += a;
    return trace;
}

/// Area under the age sawtooth from its geometric decomposition: one
/// parallelogram per non-final task plus the trapezoid of the final task.
///
///   A_n = c_K^2 / 2 + (tau0 - gen_K + 1/2) c_K + sum_{k<K} (gen_{k+1} - gen_k) c_k
inline double closed_form_age(const Instance& inst, const CompletionLog& log, int app) {
    const std::vector<int> done = detail::completion_slots(inst, log, app);
    const auto& tasks = inst.apps[static_cast<std::size_t>(app)];
    const std::size_t last = tasks.size() - 1;

    const double c_last = done[last];
    double area = c_last * c_last / 2.0 + (inst.tau0 - tasks[last].gen_time + 0.5) * c_last;
    for (std::size_t k = 0; k < last; ++k) {
        const double gap = tasks[k + 1].gen_time - tasks[k].gen_time;
        area += gap * done[k];
    }
    return area;
}

inline double sum_age(const Instance& inst, const CompletionLog& log) {
    double total = 0.0;
    for (int n = 0; n < inst.num_apps(); ++n) total += closed_form_age(inst, log, n);
    return total;
}

/// Writes "app,t,age" rows for slots 1..length, zero-padding past each
/// application's last completion. Applications are printed one-based.
inline void write_age_csv(std::ostream& os, const std::vector<AgeTrace>& traces, int length) {
    os << "app,t,age\n";
    char buf[64];
    for (const auto& tr : traces) {
        for (int t = 1; t <= length; ++t) {
            const double a = t <= static_cast<int>(tr.ages.size()) ? tr.ages[static_cast<std::size_t>(t - 1)] : 0.0;
            std::snprintf(buf, sizeof buf, "%.12g", a);
            os << tr.app + 1 << ',' << t << ',' << buf << '\n';
        }
    }
}

} // namespace aotsched
