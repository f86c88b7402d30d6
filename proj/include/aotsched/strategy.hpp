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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aotsched/heuristic.hpp"
#include "aotsched/model.hpp"
#include "aotsched/oracle.hpp"
#include "aotsched/result.hpp"

namespace aotsched {

enum class Strategy { Heuristic, AgeOptimal, DelayOptimal, MecOnly, MecRoundRobin };

inline constexpr std::array<Strategy, 5> kAllStrategies = {Strategy::Heuristic, Strategy::AgeOptimal,
                                                           Strategy::DelayOptimal, Strategy::MecOnly,
                                                           Strategy::MecRoundRobin};

inline std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::Heuristic: return "heuristic";
    case Strategy::AgeOptimal: return "age-optimal";
    case Strategy::DelayOptimal: return "delay-optimal";
    case Strategy::MecOnly: return "mec-only";
    case Strategy::MecRoundRobin: return "mec-round-robin";
    }
    return "unknown";
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
    for (Strategy s : kAllStrategies)
        if (to_string(s) == name) return s;
    return std::nullopt;
}

struct SolveOptions {
    std::uint64_t node_limit = 50'000'000;
    DelayObjective delay_objective = DelayObjective::Makespan;
};

/// Runs one strategy. Throws InfeasibleError when no schedule fits.
inline StrategyResult run_strategy(const Instance& inst, Strategy strategy, const SolveOptions& opts = {}) {
    OracleOptions oo;
    oo.node_limit = opts.node_limit;
    oo.delay_objective = opts.delay_objective;
    const std::string name(to_string(strategy));
    switch (strategy) {
    case Strategy::Heuristic: return schedule_heuristic(inst);
    case Strategy::AgeOptimal: return solve_exact(inst, OracleMode::AgeOptimal, oo).to_strategy(name);
    case Strategy::DelayOptimal: return solve_exact(inst, OracleMode::DelayOptimal, oo).to_strategy(name);
    case Strategy::MecOnly: return solve_exact(inst, OracleMode::MecOnly, oo).to_strategy(name);
    case Strategy::MecRoundRobin:
        oo.fixed_order = round_robin_order(inst);
        return solve_exact(inst, OracleMode::MecOnly, oo).to_strategy(name);
    }
    throw std::invalid_argument("unknown strategy");
}

} // namespace aotsched
