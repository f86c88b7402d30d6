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

// Exact solver for small instances.
//
// Without loss of optimality tasks run back to back from slot 1: an idle slot
// can always be folded into the next task's window, which lowers its energy
// and moves nothing else. A solution is then an FCFS-respecting task order
// plus a slot count per task, and for a fixed window the least energy has a
// closed form (see WindowEnergy). The search sweeps states
// (tasks done per application, slots used) in increasing slot order and keeps,
// per state, the labels not dominated in (cost so far, energy so far, order).
// Future cost never depends on how a state was reached, so dropping dominated
// labels is exact. Labels whose cost plus a lower bound on the remaining cost
// exceed the incumbent are pruned.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "aotsched/aot.hpp"
#include "aotsched/energy.hpp"
#include "aotsched/model.hpp"
#include "aotsched/result.hpp"

namespace aotsched {

enum class OracleMode {
    AgeOptimal,   // minimize the sum of ages
    DelayOptimal, // minimize completion time
    MecOnly,      // minimize the sum of ages with every bit offloaded
};

enum class DelayObjective {
    Makespan,      // last completion slot
    SumCompletion, // sum of all task completion slots
};

inline const char* to_string(OracleMode mode) {
    switch (mode) {
    case OracleMode::AgeOptimal: return "age-optimal";
    case OracleMode::DelayOptimal: return "delay-optimal";
    case OracleMode::MecOnly: return "mec-only";
    }
    return "unknown";
}

struct OracleOptions {
    std::uint64_t node_limit = 50'000'000;
    DelayObjective delay_objective = DelayObjective::Makespan;
    /// Application index per step. Restricts the search to this one order.
    std::optional<std::vector<int>> fixed_order;
};

struct OracleResult {
    double objective = 0.0;
    Schedule schedule;
    CompletionLog log;
    EnergyLedger ledger;
    bool proven_optimal = false;
    std::vector<TaskId> order;
    std::vector<int> slots; // slot count per step of `order`
    int completion_time = 0;
    double sum_aot = 0.0;
    std::uint64_t nodes = 0;

    StrategyResult to_strategy(std::string name) const {
        StrategyResult r;
        r.strategy = std::move(name);
        r.sum_aot = sum_aot;
        r.completion_time = completion_time;
        r.schedule = schedule;
        r.log = log;
        r.ledger = ledger;
        r.order = order;
        r.proven_optimal = proven_optimal;
        return r;
    }
};

/// Relative slack on the energy budget so that schedules built from the same
/// closed forms along a different summation order are not rejected.
inline constexpr double kEnergySlack = 1e-12;

namespace detail {

enum class CostKind { Age, Makespan, SumCompletion };

struct Label {
    double cost = 0.0;
    double energy = 0.0;
    std::vector<std::uint8_t> apps;
    std::vector<std::uint16_t> slots;
};

/// Lexicographic comparison of the decision sequence: applications first,
/// then slot counts.
inline bool order_less(const Label& a, const Label& b) {
    if (a.apps != b.apps) return a.apps < b.apps;
    return a.slots < b.slots;
}

inline bool order_less_eq(const Label& a, const Label& b) { return !order_less(b, a); }

class Search {
  public:
    Search(const Instance& inst, OracleMode mode, const OracleOptions& opts)
        : inst_(inst), opts_(opts), window_(inst, mode == OracleMode::MecOnly ? OffloadMode::OffloadOnly : OffloadMode::Joint) {
        if (mode == OracleMode::DelayOptimal)
            kind_ = opts.delay_objective == DelayObjective::Makespan ? CostKind::Makespan : CostKind::SumCompletion;
        else
            kind_ = CostKind::Age;
        n_apps_ = inst.num_apps();
        radix_.assign(static_cast<std::size_t>(n_apps_) + 1, 1);
        for (int n = 0; n < n_apps_; ++n)
            radix_[static_cast<std::size_t>(n) + 1] = radix_[static_cast<std::size_t>(n)] * (inst.num_tasks(n) + 1);
        total_tasks_ = inst.total_tasks();
        e_cap_ = inst.e_max * (1.0 + kEnergySlack);
        if (opts.fixed_order) {
            const auto& fo = *opts.fixed_order;
            if (static_cast<int>(fo.size()) != total_tasks_)
                throw std::invalid_argument("fixed order must list every task exactly once");
            std::vector<int> count(static_cast<std::size_t>(n_apps_), 0);
            for (int a : fo) {
                if (a < 0 || a >= n_apps_) throw std::invalid_argument("fixed order names an unknown application");
                ++count[static_cast<std::size_t>(a)];
            }
            for (int n = 0; n < n_apps_; ++n)
                if (count[static_cast<std::size_t>(n)] != inst.num_tasks(n))
                    throw std::invalid_argument("fixed order does not match the task counts");
        }
    }

    std::optional<Label> run() {
        seed_incumbent();
        const int horizon = inst_.horizon;
        std::vector<std::map<int, std::vector<Label>>> buckets(static_cast<std::size_t>(horizon) + 1);
        buckets[0][0].push_back(Label{});
        std::vector<int> ptr(static_cast<std::size_t>(n_apps_));

        for (int t = 0; t <= horizon; ++t) {
            for (auto& [code, labels] : buckets[static_cast<std::size_t>(t)]) {
                decode(code, ptr);
                const int depth = done_count(ptr);
                if (depth == total_tasks_) {
                    for (auto& l : labels) offer(l, t);
                    continue;
                }
                for (const Label& label : labels) {
                    if (incumbent_ && label.cost + lower_bound(ptr, t) > cutoff()) continue;
                    if (++nodes_ > opts_.node_limit) {
                        exhausted_ = true;
                        return incumbent_;
                    }
                    expand(label, ptr, t, depth, buckets);
                }
            }
            buckets[static_cast<std::size_t>(t)].clear();
        }
        return incumbent_;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool complete() const { return !exhausted_; }
    int completion_of(const Label& l) const {
        int t = 0;
        for (auto s : l.slots) t += s;
        return t;
    }

  private:
    void decode(int code, std::vector<int>& ptr) const {
        for (int n = 0; n < n_apps_; ++n)
            ptr[static_cast<std::size_t>(n)] = (code / radix_[static_cast<std::size_t>(n)]) % (inst_.num_tasks(n) + 1);
    }

    static int done_count(const std::vector<int>& ptr) {
        int d = 0;
        for (int p : ptr) d += p;
        return d;
    }

    double head_gen(int app, int ptr) const { return inst_.task({app, ptr}).gen_time; }

    /// Cost accrued while the chosen task occupies slots t+1..t+s.
    double step_cost(const std::vector<int>& ptr, int t, int s) const {
        switch (kind_) {
        case CostKind::Makespan: return s;
        case CostKind::SumCompletion: return t + s;
        case CostKind::Age: break;
        }
        double cost = 0.0;
        const double ramp = static_cast<double>(s) * t + 0.5 * s * (s + 1);
        for (int m = 0; m < n_apps_; ++m) {
            const int p = ptr[static_cast<std::size_t>(m)];
            if (p == inst_.num_tasks(m)) continue;
            cost += s * (inst_.tau0 - head_gen(m, p)) + ramp;
        }
        return cost;
    }

    /// Lower bound on the cost still to come from state (ptr, t).
    double lower_bound(const std::vector<int>& ptr, int t) const {
        const int remaining = total_tasks_ - done_count(ptr);
        switch (kind_) {
        case CostKind::Makespan: return remaining;
        case CostKind::SumCompletion: return static_cast<double>(remaining) * t + 0.5 * remaining * (remaining + 1);
        case CostKind::Age: break;
        }
        // Each unfinished application stays active for at least as many slots
        // as it has tasks left, and its age is never below the age of its
        // last task.
        double bound = 0.0;
        for (int m = 0; m < n_apps_; ++m) {
            const int r = inst_.num_tasks(m) - ptr[static_cast<std::size_t>(m)];
            if (r == 0) continue;
            const double last_gen = inst_.apps[static_cast<std::size_t>(m)].back().gen_time;
            bound += r * (inst_.tau0 - last_gen) + static_cast<double>(r) * t + 0.5 * r * (r + 1);
        }
        return bound;
    }

    double cutoff() const { return incumbent_->cost + tolerance(incumbent_->cost); }
    static double tolerance(double cost) { return 1e-9 * std::max(1.0, std::abs(cost)); }

    bool better(const Label& a, int ta, const Label& b, int tb) const {
        const double tol = tolerance(b.cost);
        if (a.cost < b.cost - tol) return true;
        if (a.cost > b.cost + tol) return false;
        if (ta != tb) return ta < tb;
        return order_less(a, b);
    }

    void offer(const Label& l, int t) {
        if (l.energy > e_cap_) return;
        if (!incumbent_ || better(l, t, *incumbent_, incumbent_t_)) {
            incumbent_ = l;
            incumbent_t_ = t;
        }
    }

    void expand(const Label& label, std::vector<int>& ptr, int t, int depth,
                std::vector<std::map<int, std::vector<Label>>>& buckets) {
        for (int n = 0; n < n_apps_; ++n) {
            const int p = ptr[static_cast<std::size_t>(n)];
            if (p == inst_.num_tasks(n)) continue;
            if (opts_.fixed_order && (*opts_.fixed_order)[static_cast<std::size_t>(depth)] != n) continue;
            const double bits = inst_.task({n, p}).size_bits;
            const int next_code = code_after(ptr, n);

            ++ptr[static_cast<std::size_t>(n)];
            double weight = 0.0;
            for (int s = 1; t + s <= inst_.horizon; ++s) {
                weight += window_.weight_sum(t + s, 1);
                const double cost = label.cost + step_cost_before(ptr, n, t, s);
                if (incumbent_ && cost + lower_bound(ptr, t + s) > cutoff()) break;
                const double energy = label.energy + window_.from_weight(bits, weight);
                if (energy > e_cap_) continue;
                Label next;
                next.cost = cost;
                next.energy = energy;
                next.apps = label.apps;
                next.apps.push_back(static_cast<std::uint8_t>(n));
                next.slots = label.slots;
                next.slots.push_back(static_cast<std::uint16_t>(s));
                insert(buckets[static_cast<std::size_t>(t + s)][next_code], std::move(next));
            }
            --ptr[static_cast<std::size_t>(n)];
        }
    }

    /// step_cost evaluated with app n's pointer still at the running task.
    double step_cost_before(std::vector<int>& ptr, int n, int t, int s) const {
        --ptr[static_cast<std::size_t>(n)];
        const double c = step_cost(ptr, t, s);
        ++ptr[static_cast<std::size_t>(n)];
        return c;
    }

    int code_after(const std::vector<int>& ptr, int n) const {
        int code = 0;
        for (int m = 0; m < n_apps_; ++m) code += ptr[static_cast<std::size_t>(m)] * radix_[static_cast<std::size_t>(m)];
        return code + radix_[static_cast<std::size_t>(n)];
    }

    static bool dominates(const Label& a, const Label& b) {
        return a.cost <= b.cost && a.energy <= b.energy && order_less_eq(a, b);
    }

    static void insert(std::vector<Label>& front, Label&& l) {
        for (const auto& other : front)
            if (dominates(other, l)) return;
        std::erase_if(front, [&](const Label& other) { return dominates(l, other); });
        front.push_back(std::move(l));
    }

    /// A quick feasible solution: the first admissible order run with the
    /// fewest total slots, found by a small DP over (step, end slot).
    void seed_incumbent() {
        std::vector<int> order;
        if (opts_.fixed_order) {
            order = *opts_.fixed_order;
        } else {
            for (int n = 0; n < n_apps_; ++n)
                for (int k = 0; k < inst_.num_tasks(n); ++k) order.push_back(n);
        }
        const int horizon = inst_.horizon;
        const double inf = std::numeric_limits<double>::infinity();
        const auto steps = order.size();
        // best[i][t]: least energy to finish the first i steps exactly at slot t.
        std::vector<std::vector<double>> best(steps + 1, std::vector<double>(static_cast<std::size_t>(horizon) + 1, inf));
        std::vector<std::vector<int>> choice(steps + 1, std::vector<int>(static_cast<std::size_t>(horizon) + 1, 0));
        best[0][0] = 0.0;
        std::vector<int> ptr(static_cast<std::size_t>(n_apps_), 0);
        std::vector<double> bits;
        for (int a : order) bits.push_back(inst_.task({a, ptr[static_cast<std::size_t>(a)]++}).size_bits);
        for (std::size_t i = 1; i <= steps; ++i) {
            for (int end = static_cast<int>(i); end <= horizon; ++end) {
                double weight = 0.0;
                for (int s = 1; end - s >= static_cast<int>(i) - 1; ++s) {
                    weight += window_.weight_sum(end - s + 1, 1);
                    const double prev = best[i - 1][static_cast<std::size_t>(end - s)];
                    if (prev == inf) continue;
                    const double e = prev + window_.from_weight(bits[i - 1], weight);
                    if (e < best[i][static_cast<std::size_t>(end)]) {
                        best[i][static_cast<std::size_t>(end)] = e;
                        choice[i][static_cast<std::size_t>(end)] = s;
                    }
                }
            }
        }
        for (int end = static_cast<int>(steps); end <= horizon; ++end) {
            if (best[steps][static_cast<std::size_t>(end)] > e_cap_) continue;
            std::vector<int> slots(steps);
            int t = end;
            for (std::size_t i = steps; i >= 1; --i) {
                slots[i - 1] = choice[i][static_cast<std::size_t>(t)];
                t -= slots[i - 1];
            }
            offer(replay(order, slots), end);
            return;
        }
    }

  public:
    /// Rebuilds a label (cost and energy) from an explicit order and slot vector.
    Label replay(const std::vector<int>& order, const std::vector<int>& slots) const {
        Label l;
        std::vector<int> ptr(static_cast<std::size_t>(n_apps_), 0);
        int t = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const int n = order[i];
            const int s = slots[i];
            l.cost += step_cost(ptr, t, s);
            l.energy += window_(inst_.task({n, ptr[static_cast<std::size_t>(n)]}).size_bits, t + 1, s);
            ++ptr[static_cast<std::size_t>(n)];
            t += s;
            l.apps.push_back(static_cast<std::uint8_t>(n));
            l.slots.push_back(static_cast<std::uint16_t>(s));
        }
        return l;
    }

  private:
    const Instance& inst_;
    OracleOptions opts_;
    WindowEnergy window_;
    CostKind kind_ = CostKind::Age;
    int n_apps_ = 0;
    int total_tasks_ = 0;
    std::vector<int> radix_;
    double e_cap_ = 0.0;
    std::optional<Label> incumbent_;
    int incumbent_t_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace detail

/// Builds the schedule for an explicit order (application per step) and slot
/// counts, using the mode's optimal per-window partition.
inline OracleResult build_oracle_result(const Instance& inst, OracleMode mode, const std::vector<int>& apps,
                                        const std::vector<int>& slots) {
    const OffloadMode offload = mode == OracleMode::MecOnly ? OffloadMode::OffloadOnly : OffloadMode::Joint;
    OracleResult r;
    std::vector<int> ptr(inst.apps.size(), 0);
    int start = 1;
    for (std::size_t i = 0; i < apps.size(); ++i) {
        const TaskId id{apps[i], ptr[static_cast<std::size_t>(apps[i])]++};
        TaskPlan plan = plan_task_window(inst.task(id), start, slots[i], inst, offload);
        commit_plan(r.schedule, plan);
        r.ledger.assigned[id] = plan.energy;
        r.ledger.consumed[id] = plan.energy;
        r.order.push_back(id);
        r.slots.push_back(slots[i]);
        start += slots[i];
    }
    r.log = CompletionLog::from_schedule(inst, r.schedule);
    r.completion_time = r.schedule.completion_time();
    r.sum_aot = sum_age(inst, r.log);
    return r;
}

inline double delay_objective_value(const OracleResult& r, DelayObjective obj) {
    if (obj == DelayObjective::Makespan) return r.completion_time;
    double total = 0.0;
    for (const auto& [id, slot] : r.schedule.completion_slots) total += slot;
    return total;
}

inline OracleResult solve_exact(const Instance& inst, OracleMode mode, const OracleOptions& opts = {}) {
    require_valid(inst);
    detail::Search search(inst, mode, opts);
    const std::optional<detail::Label> best = search.run();
    if (!best)
        throw InfeasibleError(std::string(to_string(mode)) + ": no schedule meets e_max within the horizon");

    std::vector<int> apps(best->apps.begin(), best->apps.end());
    std::vector<int> slots(best->slots.begin(), best->slots.end());
    OracleResult r = build_oracle_result(inst, mode, apps, slots);
    r.proven_optimal = search.complete();
    r.nodes = search.nodes();
    r.objective = mode == OracleMode::DelayOptimal ? delay_objective_value(r, opts.delay_objective) : r.sum_aot;
    return r;
}

/// Round-robin order over applications, skipping exhausted ones.
inline std::vector<int> round_robin_order(const Instance& inst) {
    std::vector<int> left;
    for (const auto& tasks : inst.apps) left.push_back(static_cast<int>(tasks.size()));
    std::vector<int> order;
    const int total = inst.total_tasks();
    while (static_cast<int>(order.size()) < total) {
        for (std::size_t n = 0; n < left.size(); ++n) {
            if (left[n] == 0) continue;
            --left[n];
            order.push_back(static_cast<int>(n));
        }
    }
    return order;
}

// ---------------------------------------------------------------------------
// Flat verification for tiny instances.

struct Counterexample {
    std::string reason;
    double flat_objective = 0.0;
    std::vector<int> apps;
    std::vector<int> slots;
};

namespace detail {

/// Least energy to push `bits` through the given window, from the KKT
/// conditions of the per-slot split solved numerically: for a multiplier mu
/// each slot runs sqrt(mu / 3 alpha) bits locally and (mu h / m lambda)^(1/(m-1))
/// remotely; mu is bisected until the volumes add up.
inline double kkt_window_energy(double bits, std::span<const double> gains, const EnergyParams& p, bool local_allowed) {
    const double alpha = p.alpha();
    const double lambda = p.lambda();
    const double inv = 1.0 / (p.m - 1);
    auto volumes = [&](double mu, std::vector<double>& loc, std::vector<double>& off) {
        double total = 0.0;
        for (std::size_t i = 0; i < gains.size(); ++i) {
            loc[i] = local_allowed ? std::sqrt(mu / (3.0 * alpha)) : 0.0;
            off[i] = std::pow(mu * gains[i] / (p.m * lambda), inv);
            total += loc[i] + off[i];
        }
        return total;
    };
    std::vector<double> loc(gains.size()), off(gains.size());
    double lo = 0.0, hi = 1e-30;
    while (volumes(hi, loc, off) < bits) hi *= 2.0;
    for (int it = 0; it < 2000 && hi - lo > hi * 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (volumes(mid, loc, off) < bits ? lo : hi) = mid;
    }
    const double total = volumes(hi, loc, off);
    const double scale = bits / total;
    double energy = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        const double x = loc[i] * scale;
        const double y = off[i] * scale;
        energy += alpha * x * x * x + lambda * std::pow(y, p.m) / gains[i];
    }
    return energy;
}

inline void multiset_orders(std::vector<int>& counts, std::vector<int>& cur, int total,
                            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == total) {
        out.push_back(cur);
        return;
    }
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (counts[n] == 0) continue;
        --counts[n];
        cur.push_back(static_cast<int>(n));
        multiset_orders(counts, cur, total, out);
        cur.pop_back();
        ++counts[n];
    }
}

} // namespace detail

/// Enumerates every order and every slot vector (no pruning) and compares the
/// best objective found with `result.objective`. Ages come from the slot-by-slot
/// trace and energies from an independent numeric solve of the split.
inline std::optional<Counterexample> verify_optimality_small(const Instance& inst, const OracleResult& result,
                                                             OracleMode mode,
                                                             DelayObjective delay = DelayObjective::Makespan,
                                                             double tolerance = 1e-6) {
    if (inst.total_tasks() > 4) throw std::invalid_argument("flat verification is limited to 4 tasks");
    require_valid(inst);
    const bool local_allowed = mode != OracleMode::MecOnly;
    const int total = inst.total_tasks();

    // Any schedule spanning M slots keeps some application active through all
    // of them, so its age sum is at least sum_{u<=M} (tau0 - latest gen + u).
    double latest_gen = 0.0;
    for (const auto& tasks : inst.apps) latest_gen = std::max(latest_gen, tasks.back().gen_time);
    int max_span = inst.horizon;
    if (mode == OracleMode::DelayOptimal) {
        max_span = std::min(max_span, static_cast<int>(std::floor(result.objective + tolerance)));
    } else {
        double bound = 0.0;
        for (int m = 1; m <= inst.horizon; ++m) {
            bound += inst.tau0 - latest_gen + m;
            if (bound > result.objective + tolerance) {
                max_span = m - 1;
                break;
            }
        }
    }

    std::vector<int> counts;
    for (const auto& tasks : inst.apps) counts.push_back(static_cast<int>(tasks.size()));
    std::vector<std::vector<int>> orders;
    std::vector<int> cur;
    detail::multiset_orders(counts, cur, total, orders);

    // Windows recur across slot vectors; memoize by (task, start, length).
    std::map<std::tuple<int, int, int, int>, double> window_cache;
    auto window_energy = [&](TaskId id, int start, int count) {
        const auto key = std::make_tuple(id.app, id.index, start, count);
        auto it = window_cache.find(key);
        if (it != window_cache.end()) return it->second;
        std::span<const double> gains(inst.channel.gains.data() + (start - 1), static_cast<std::size_t>(count));
        const double e = detail::kkt_window_energy(inst.task(id).size_bits, gains, inst.params, local_allowed);
        window_cache.emplace(key, e);
        return e;
    };

    std::optional<Counterexample> best;
    std::vector<int> slots(static_cast<std::size_t>(total), 1);
    const double cap = inst.e_max * (1.0 + kEnergySlack);
    for (const auto& order : orders) {
        std::fill(slots.begin(), slots.end(), 1);
        while (true) {
            int span = 0;
            for (int s : slots) span += s;
            if (span <= max_span) {
                Schedule sched;
                double energy = 0.0;
                std::vector<int> ptr(inst.apps.size(), 0);
                int start = 1;
                for (std::size_t i = 0; i < order.size(); ++i) {
                    const TaskId id{order[i], ptr[static_cast<std::size_t>(order[i])]++};
                    energy += window_energy(id, start, slots[i]);
                    start += slots[i];
                    sched.completion_slots[id] = start - 1;
                }
                if (energy <= cap) {
                    double value = 0.0;
                    if (mode == OracleMode::DelayOptimal) {
                        for (const auto& [id, slot] : sched.completion_slots)
                            value = delay == DelayObjective::Makespan ? std::max(value, static_cast<double>(slot)) : value + slot;
                    } else {
                        const CompletionLog log = CompletionLog::from_schedule(inst, sched);
                        for (int n = 0; n < inst.num_apps(); ++n) value += age_trace(inst, log, n).overall;
                    }
                    if (!best || value < best->flat_objective) best = Counterexample{"", value, order, slots};
                }
            }
            // Odometer over slot vectors with span <= max_span.
            std::size_t i = 0;
            for (; i < slots.size(); ++i) {
                ++slots[i];
                int s = 0;
                for (int x : slots) s += x;
                if (s <= max_span) break;
                slots[i] = 1;
            }
            if (i == slots.size()) break;
        }
    }

    if (!best) {
        return Counterexample{"flat enumeration found no feasible point", std::numeric_limits<double>::infinity(), {}, {}};
    }
    if (best->flat_objective < result.objective - tolerance) {
        best->reason = "flat enumeration beats the reported optimum";
        return best;
    }
    if (best->flat_objective > result.objective + tolerance) {
        best->reason = "reported optimum is not attained by any feasible point";
        return best;
    }
    return std::nullopt;
}

} // namespace aotsched
