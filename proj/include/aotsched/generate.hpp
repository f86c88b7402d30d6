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
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "aotsched/model.hpp"

namespace aotsched {

/// Random instance parameters. Defaults reproduce the reference simulation
/// setting: 3 applications with 3 tasks each, generation times in [1, 8],
/// sizes in [400, 600] bits and channel gains in [1e-5, 1e-3].
struct GenerationConfig {
    int num_apps = 3;
    int tasks_per_app = 3;
    double gen_min = 1.0;
    double gen_max = 8.0;
    double tau0 = 10.0;
    double size_min = 400.0;
    double size_max = 600.0;
    double gain_min = 1e-5;
    double gain_max = 1e-3;
    double e_max = 0.15;
    int horizon = 200;
    EnergyParams params;
};

/// Portable uniform draws on top of mt19937_64, whose output sequence is fixed
/// by the standard. The 53 high bits of each word give a double in [0, 1).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

inline void validate_config(const GenerationConfig& cfg) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("generation config: " + what); };
    if (cfg.num_apps < 1) fail("num_apps must be positive");
    if (cfg.tasks_per_app < 1) fail("tasks_per_app must be positive");
    if (!(cfg.gen_min > 0) || !(cfg.gen_max >= cfg.gen_min)) fail("generation time range invalid");
    if (cfg.gen_max > cfg.tau0) fail("generation times must not exceed tau0");
    if (!(cfg.size_min > 0) || !(cfg.size_max >= cfg.size_min)) fail("size range invalid");
    if (!(cfg.gain_min > 0) || !(cfg.gain_max >= cfg.gain_min)) fail("gain range invalid");
    if (!(cfg.e_max > 0)) fail("e_max must be positive");
    if (cfg.horizon < 1) fail("horizon must be positive");
}

/// Draw order: all sizes (app-major), then all generation times (app-major,
/// sorted ascending within each application), then the channel trace.
inline Instance generate_instance(std::uint64_t seed, const GenerationConfig& cfg = {}) {
    validate_config(cfg);
    Rng rng(seed);
    const auto n_apps = static_cast<std::size_t>(cfg.num_apps);
    const auto n_tasks = static_cast<std::size_t>(cfg.tasks_per_app);

    Instance inst;
    inst.params = cfg.params;
    inst.e_max = cfg.e_max;
    inst.tau0 = cfg.tau0;
    inst.horizon = cfg.horizon;
    inst.apps.assign(n_apps, std::vector<Task>(n_tasks));

    for (std::size_t n = 0; n < n_apps; ++n) {
        for (std::size_t k = 0; k < n_tasks; ++k) {
            Task& t = inst.apps[n][k];
            t.app = static_cast<int>(n);
            t.index = static_cast<int>(k);
            t.size_bits = rng.uniform(cfg.size_min, cfg.size_max);
        }
    }
    for (std::size_t n = 0; n < n_apps; ++n) {
        std::vector<double> times(n_tasks);
        for (auto& x : times) x = rng.uniform(cfg.gen_min, cfg.gen_max);
        std::sort(times.begin(), times.end());
        for (std::size_t k = 0; k < n_tasks; ++k) inst.apps[n][k].gen_time = times[k];
    }
    inst.channel.gains.resize(static_cast<std::size_t>(cfg.horizon));
    for (auto& h : inst.channel.gains) h = rng.uniform(cfg.gain_min, cfg.gain_max);

    require_valid(inst);
    return inst;
}

} // namespace aotsched
