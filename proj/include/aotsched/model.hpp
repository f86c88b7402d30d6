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
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aotsched {

/// A task is complete once its remaining size drops to this many bits or less.
inline constexpr double kBitTolerance = 1e-6;

class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedOrderError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Physical constants of the device: CPU energy model and transmit energy model.
///
/// Local computing of D bits in one slot costs alpha * D^3 and offloading D bits
/// over a channel with gain h costs lambda * D^m / h. Both coefficients are
/// derived on every call so they can never go stale.
struct EnergyParams {
    double gamma = 1e-28;   // chip energy coefficient
    double omega = 1e5;     // CPU cycles per bit
    double tau = 0.01;      // slot length, seconds
    double lambda0 = 1e-17; // transmit energy coefficient
    int m = 3;              // monomial order of the transmit model

    double alpha() const { return gamma * omega * omega * omega / (tau * tau); }
    double lambda() const { return lambda0 / std::pow(tau, m - 1); }

    bool operator==(const EnergyParams&) const = default;
};

/// Zero-based (application, task) pair. Printed one-based.
struct TaskId {
    int app = 0;
    int index = 0;

    auto operator<=>(const TaskId&) const = default;

    std::string str() const {
        return "(" + std::to_string(app + 1) + "," + std::to_string(index + 1) + ")";
    }
};

struct Task {
    int app = 0;
    int index = 0;
    double size_bits = 0.0;
    double gen_time = 0.0;

    TaskId id() const { return {app, index}; }
    bool operator==(const Task&) const = default;
};

/// Channel gains h(1..T); slots are one-based.
struct ChannelTrace {
    std::vector<double> gains;

    double at(int slot) const { return gains.at(static_cast<std::size_t>(slot - 1)); }
    int length() const { return static_cast<int>(gains.size()); }
    bool operator==(const ChannelTrace&) const = default;
};

struct Instance {
    std::vector<std::vector<Task>> apps;
    ChannelTrace channel;
    EnergyParams params;
    double e_max = 0.15;
    double tau0 = 10.0;
    int horizon = 200;

    int num_apps() const { return static_cast<int>(apps.size()); }
    int num_tasks(int app) const { return static_cast<int>(apps.at(static_cast<std::size_t>(app)).size()); }

    int total_tasks() const {
        int total = 0;
        for (const auto& a : apps) total += static_cast<int>(a.size());
        return total;
    }

    const Task& task(TaskId id) const {
        return apps.at(static_cast<std::size_t>(id.app)).at(static_cast<std::size_t>(id.index));
    }

    bool is_last(TaskId id) const { return id.index + 1 == num_tasks(id.app); }

    bool operator==(const Instance&) const = default;
};

/// What happens in one slot. An empty task means the slot is idle.
struct SlotDecision {
    int slot = 1;
    std::optional<TaskId> task;
    double d_loc = 0.0;
    double d_off = 0.0;
};

struct Schedule {
    std::vector<SlotDecision> decisions;
    std::map<TaskId, int> completion_slots;

    /// Last slot in which any task completes; zero for an empty schedule.
    int completion_time() const {
        int last = 0;
        for (const auto& [id, slot] : completion_slots) last = std::max(last, slot);
        return last;
    }
};

/// Every violated invariant of the instance, one message per violation.
inline std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> errors;
    const auto& p = inst.params;
    if (!(p.gamma > 0)) errors.emplace_back("gamma must be positive");
    if (!(p.omega >= 1)) errors.emplace_back("omega must be at least 1");
    if (!(p.tau > 0)) errors.emplace_back("tau must be positive");
    if (!(p.lambda0 > 0)) errors.emplace_back("lambda0 must be positive");
    if (p.m < 2 || p.m > 5) errors.emplace_back("monomial order m must lie in [2, 5]");
    if (!(inst.e_max > 0)) errors.emplace_back("e_max must be positive");
    if (inst.horizon < 1) errors.emplace_back("horizon must be at least 1");
    if (inst.apps.empty()) errors.emplace_back("instance has no applications");

    for (std::size_t n = 0; n < inst.apps.size(); ++n) {
        const auto& tasks = inst.apps[n];
        if (tasks.empty()) errors.push_back("application " + std::to_string(n + 1) + " has no tasks");
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            const Task& t = tasks[k];
            const std::string name = TaskId{static_cast<int>(n), static_cast<int>(k)}.str();
            if (t.app != static_cast<int>(n) || t.index != static_cast<int>(k))
                errors.push_back("task " + name + " carries a mismatched id");
            if (!(t.size_bits > 0) || !std::isfinite(t.size_bits))
                errors.push_back("task " + name + " size_bits must be positive");
            if (!std::isfinite(t.gen_time)) errors.push_back("task " + name + " gen_time is not finite");
            if (t.gen_time > inst.tau0) errors.push_back("task " + name + " generated after tau0");
            if (k > 0 && !(t.gen_time > tasks[k - 1].gen_time))
                errors.push_back("task " + name + " gen_time not strictly increasing");
        }
    }

    if (inst.channel.length() != inst.horizon)
        errors.push_back("channel length " + std::to_string(inst.channel.length()) + " differs from horizon " +
                         std::to_string(inst.horizon));
    for (std::size_t t = 0; t < inst.channel.gains.size(); ++t) {
        double h = inst.channel.gains[t];
        if (!(h > 0) || !std::isfinite(h)) {
            errors.push_back("channel gain at slot " + std::to_string(t + 1) + " must be positive");
        }
    }
    return errors;
}

/// Throws std::invalid_argument listing every problem when the instance is invalid.
inline void require_valid(const Instance& inst) {
    auto errors = validate_instance(inst);
    if (errors.empty()) return;
    std::string msg = "invalid instance:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

} // namespace aotsched
