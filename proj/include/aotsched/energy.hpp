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

// Energy model of one mobile device and the per-task offloading optimizer.
//
// In one slot the device computes d_loc bits locally for alpha * d_loc^3 and
// offloads d_off bits for lambda * d_off^m / h. For m = 3 the cheapest way to
// process D bits in a slot puts D / (1 + sqrt(alpha h / lambda)) bits on the
// local CPU, which costs alpha D^3 / (1 + sqrt(alpha h / lambda))^2. Writing
// w(h) = 1 + sqrt(alpha h / lambda), spreading L bits over a window of slots
// in proportion to w gives the window minimum alpha L^3 / (sum w)^2.

#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aotsched/model.hpp"

namespace aotsched {

/// How a task may use the two execution paths.
enum class OffloadMode {
    Joint,       // local CPU and MEC server, optimal split per slot
    OffloadOnly, // every bit goes to the MEC server
};

inline double local_energy(double d_loc, const EnergyParams& p) {
    if (d_loc < 0) throw std::invalid_argument("local volume must be non-negative");
    return p.alpha() * d_loc * d_loc * d_loc;
}

inline double offload_energy(double d_off, double h, const EnergyParams& p) {
    if (d_off < 0) throw std::invalid_argument("offloaded volume must be non-negative");
    if (!(h > 0)) throw std::invalid_argument("channel gain must be positive");
    return p.lambda() * std::pow(d_off, p.m) / h;
}

/// Energy of one slot for an arbitrary split.
inline double slot_energy(double d_loc, double d_off, double h, const EnergyParams& p) {
    return local_energy(d_loc, p) + offload_energy(d_off, h, p);
}

struct Split {
    double d_loc = 0.0;
    double d_off = 0.0;
};

namespace detail {

inline void require_cubic(const EnergyParams& p) {
    if (p.m != 3)
        throw UnsupportedOrderError("closed-form offloading requires monomial order 3, got " + std::to_string(p.m));
}

/// w(h) = 1 + sqrt(alpha h / lambda)
inline double slot_weight(double h, const EnergyParams& p) {
    if (!(h > 0)) throw std::invalid_argument("channel gain must be positive");
    return 1.0 + std::sqrt(p.alpha() * h / p.lambda());
}

} // namespace detail

inline Split optimal_split(double d_total, double h, const EnergyParams& p) {
    detail::require_cubic(p);
    if (d_total < 0) throw std::invalid_argument("slot volume must be non-negative");
    Split s;
    s.d_loc = d_total / detail::slot_weight(h, p);
    s.d_off = d_total - s.d_loc;
    return s;
}

inline double slot_min_energy(double d_total, double h, const EnergyParams& p) {
    detail::require_cubic(p);
    if (d_total < 0) throw std::invalid_argument("slot volume must be non-negative");
    const double w = detail::slot_weight(h, p);
    return p.alpha() * d_total * d_total * d_total / (w * w);
}

/// Splits d_total across the slots of a window so that the summed minimum
/// slot energy is smallest: each slot takes a share proportional to w(h).
inline std::vector<double> partition_across_slots(double d_total, std::span<const double> gains,
                                                  const EnergyParams& p) {
    detail::require_cubic(p);
    if (gains.empty()) throw std::invalid_argument("partition needs at least one slot");
    std::vector<double> weights(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) weights[i] = detail::slot_weight(gains[i], p);
    const double total_weight = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> out(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) out[i] = d_total * weights[i] / total_weight;
    return out;
}

/// Offload-only counterpart: minimizing sum lambda D^m / h under a fixed total
/// gives shares proportional to h^(1/(m-1)). Valid for any m >= 2.
inline std::vector<double> partition_offload_only(double d_total, std::span<const double> gains,
                                                  const EnergyParams& p) {
    if (gains.empty()) throw std::invalid_argument("partition needs at least one slot");
    const double power = 1.0 / (p.m - 1);
    std::vector<double> weights(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) {
        if (!(gains[i] > 0)) throw std::invalid_argument("channel gain must be positive");
        weights[i] = std::pow(gains[i], power);
    }
    const double total_weight = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> out(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) out[i] = d_total * weights[i] / total_weight;
    return out;
}

/// Window minimum energies from cached per-slot weights.
///
/// Joint mode uses w(h) and the window energy alpha L^3 / W^2; offload-only
/// uses h^(1/(m-1)) and lambda L^m / W^(m-1), where W sums the window's weights.
class WindowEnergy {
  public:
    WindowEnergy(const Instance& inst, OffloadMode mode) : params_(inst.params), mode_(mode) {
        if (mode == OffloadMode::Joint) detail::require_cubic(params_);
        const double power = 1.0 / (params_.m - 1);
        weights_.reserve(inst.channel.gains.size());
        for (double h : inst.channel.gains)
            weights_.push_back(mode == OffloadMode::Joint ? detail::slot_weight(h, params_) : std::pow(h, power));
    }

    double weight_sum(int first, int count) const {
        double w = 0.0;
        for (int t = first; t < first + count; ++t) w += weights_.at(static_cast<std::size_t>(t - 1));
        return w;
    }

    /// Minimum energy to process `bits` in slots first..first+count-1.
    double operator()(double bits, int first, int count) const { return from_weight(bits, weight_sum(first, count)); }

    double from_weight(double bits, double w) const {
        if (mode_ == OffloadMode::Joint) return params_.alpha() * bits * bits * bits / (w * w);
        return params_.lambda() * std::pow(bits, params_.m) / std::pow(w, params_.m - 1);
    }

    int horizon() const { return static_cast<int>(weights_.size()); }
    OffloadMode mode() const { return mode_; }

  private:
    EnergyParams params_;
    OffloadMode mode_;
    std::vector<double> weights_;
};

struct EnergyLedger {
    std::map<TaskId, double> assigned;
    std::map<TaskId, double> consumed;

    double total_assigned() const {
        double s = 0.0;
        for (const auto& [id, e] : assigned) s += e;
        return s;
    }
    double total_consumed() const {
        double s = 0.0;
        for (const auto& [id, e] : consumed) s += e;
        return s;
    }
};

struct SlotPlan {
    double d = 0.0;
    double d_loc = 0.0;
    double d_off = 0.0;
    double energy = 0.0;
};

struct TaskPlan {
    TaskId task;
    int start_slot = 1;
    int num_slots = 0;
    std::vector<SlotPlan> per_slot;
    double energy = 0.0;

    int end_slot() const { return start_slot + num_slots - 1; }
};

/// Plan for processing `task` in exactly `num_slots` slots from `start_slot`.
inline TaskPlan plan_task_window(const Task& task, int start_slot, int num_slots, const Instance& inst,
                                 OffloadMode mode = OffloadMode::Joint) {
    if (num_slots < 1) throw std::invalid_argument("a task needs at least one slot");
    if (start_slot < 1 || start_slot + num_slots - 1 > inst.channel.length())
        throw std::invalid_argument("plan window exceeds the channel trace");
    const auto& p = inst.params;
    std::span<const double> gains(inst.channel.gains.data() + (start_slot - 1), static_cast<std::size_t>(num_slots));
    const std::vector<double> volumes = mode == OffloadMode::Joint ? partition_across_slots(task.size_bits, gains, p)
                                                                   : partition_offload_only(task.size_bits, gains, p);
    TaskPlan plan;
    plan.task = task.id();
    plan.start_slot = start_slot;
    plan.num_slots = num_slots;
    plan.per_slot.reserve(volumes.size());
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        SlotPlan sp;
        sp.d = volumes[i];
        if (mode == OffloadMode::Joint) {
            const Split split = optimal_split(sp.d, gains[i], p);
            sp.d_loc = split.d_loc;
            sp.d_off = split.d_off;
            sp.energy = slot_min_energy(sp.d, gains[i], p);
        } else {
            sp.d_off = sp.d;
            sp.energy = offload_energy(sp.d_off, gains[i], p);
        }
        plan.energy += sp.energy;
        plan.per_slot.push_back(sp);
    }
    return plan;
}

/// Feasibility test: the fewest consecutive slots from `start_slot` whose
/// optimal plan fits in `budget`. Throws InfeasibleError once the horizon
/// runs out.
inline TaskPlan min_slots_plan(const Task& task, int start_slot, double budget, const Instance& inst,
                               OffloadMode mode = OffloadMode::Joint) {
    if (!(budget > 0)) throw std::invalid_argument("task budget must be positive");
    if (start_slot < 1) throw std::invalid_argument("start slot must be at least 1");
    for (int s = 1; start_slot + s - 1 <= inst.horizon; ++s) {
        TaskPlan plan = plan_task_window(task, start_slot, s, inst, mode);
        if (plan.energy <= budget) return plan;
    }
    throw InfeasibleError("task " + task.id().str() + " cannot meet its budget of " + std::to_string(budget) +
                          " J before slot " + std::to_string(inst.horizon));
}

/// Total energy spent by a schedule, recomputed slot by slot.
inline double schedule_energy(const Instance& inst, const Schedule& sched) {
    double total = 0.0;
    for (const auto& d : sched.decisions) {
        if (!d.task) continue;
        total += slot_energy(d.d_loc, d.d_off, inst.channel.at(d.slot), inst.params);
    }
    return total;
}

} // namespace aotsched
