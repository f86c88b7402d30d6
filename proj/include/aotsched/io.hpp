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

// Text formats.
//
// Instances and experiment configs share one flat key-value format: one
// `key = value` pair per line, `#` starts a comment, blank lines are ignored
// and keys may appear in any order. Reals are written with 17 significant
// digits so a write/read round trip is lossless. An instance file looks like
//
//   format = aotsched-instance-1
//   tau0 = 10
//   horizon = 200
//   e_max = 0.14999999999999999
//   gamma = 1e-28
//   omega = 100000
//   tau = 0.01
//   lambda0 = 1e-17
//   m = 3
//   apps = 3
//   app.1.tasks = 3
//   task.1.1 = <size_bits> <gen_time>
//   ...
//   channel = <h(1)> <h(2)> ... <h(T)>
//
// Schedules are CSV with columns t,n,k,d_loc,d_off,E, one row per slot, with
// one-based application and task numbers and empty n,k for idle slots.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "aotsched/energy.hpp"
#include "aotsched/model.hpp"

namespace aotsched {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline std::string format_exact(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Fixed CSV formatting: 12 significant digits, '.' decimal.
inline std::string format_csv(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace detail

inline double parse_double(std::string_view text, const std::string& what) {
    text = detail::trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError(what + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

inline long long parse_int(std::string_view text, const std::string& what) {
    text = detail::trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError(what + ": expected an integer, got '" + std::string(text) + "'");
    return v;
}

inline std::uint64_t parse_uint(std::string_view text, const std::string& what) {
    text = detail::trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError(what + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

/// Splits on any of `seps`, dropping empty fields.
inline std::vector<std::string> split_fields(std::string_view s, std::string_view seps = " \t,") {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto j = s.find_first_of(seps, i);
        const auto end = j == std::string_view::npos ? s.size() : j;
        if (end > i) out.emplace_back(s.substr(i, end - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

/// Parsed key-value document. Lookups record which keys were consumed so
/// that leftovers can be reported as unknown.
class KeyValueDoc {
  public:
    static KeyValueDoc parse(std::istream& in) {
        KeyValueDoc doc;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view view(line);
            if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
            view = detail::trim(view);
            if (view.empty()) continue;
            const auto eq = view.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
            std::string key(detail::trim(view.substr(0, eq)));
            if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
            if (doc.values_.count(key)) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
            doc.values_[key] = std::string(detail::trim(view.substr(eq + 1)));
        }
        if (in.bad()) throw IoError("read error");
        return doc;
    }

    static KeyValueDoc parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open '" + path + "'");
        return parse(in);
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw ParseError("missing key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    double get_double(const std::string& key) const { return parse_double(get(key), key); }
    long long get_int(const std::string& key) const { return parse_int(get(key), key); }

    std::vector<std::string> unused_keys() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : values_)
            if (!used_.count(k)) out.push_back(k);
        return out;
    }

    void require_all_used() const {
        const auto extra = unused_keys();
        if (extra.empty()) return;
        std::string msg = "unknown key";
        msg += extra.size() > 1 ? "s:" : ":";
        for (const auto& k : extra) msg += " '" + k + "'";
        throw ParseError(msg);
    }

  private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
};

inline void write_instance(std::ostream& os, const Instance& inst) {
    os << "# aotsched instance\n";
    os << "format = aotsched-instance-1\n";
    os << "tau0 = " << format_exact(inst.tau0) << '\n';
    os << "horizon = " << inst.horizon << '\n';
    os << "e_max = " << format_exact(inst.e_max) << '\n';
    os << "gamma = " << format_exact(inst.params.gamma) << '\n';
    os << "omega = " << format_exact(inst.params.omega) << '\n';
    os << "tau = " << format_exact(inst.params.tau) << '\n';
    os << "lambda0 = " << format_exact(inst.params.lambda0) << '\n';
    os << "m = " << inst.params.m << '\n';
    os << "apps = " << inst.num_apps() << '\n';
    for (int n = 0; n < inst.num_apps(); ++n) os << "app." << n + 1 << ".tasks = " << inst.num_tasks(n) << '\n';
    os << "# task.<app>.<task> = <size_bits> <gen_time>\n";
    for (const auto& tasks : inst.apps)
        for (const auto& t : tasks)
            os << "task." << t.app + 1 << '.' << t.index + 1 << " = " << format_exact(t.size_bits) << ' '
               << format_exact(t.gen_time) << '\n';
    os << "channel =";
    for (double h : inst.channel.gains) os << ' ' << format_exact(h);
    os << '\n';
}

/// Reads an instance and validates it; throws ParseError on format errors
/// and std::invalid_argument on invariant violations.
inline Instance read_instance(std::istream& in) {
    const KeyValueDoc doc = KeyValueDoc::parse(in);
    if (doc.get("format") != "aotsched-instance-1") throw ParseError("unsupported instance format '" + doc.get("format") + "'");
    Instance inst;
    inst.tau0 = doc.get_double("tau0");
    inst.horizon = static_cast<int>(doc.get_int("horizon"));
    inst.e_max = doc.get_double("e_max");
    inst.params.gamma = doc.get_double("gamma");
    inst.params.omega = doc.get_double("omega");
    inst.params.tau = doc.get_double("tau");
    inst.params.lambda0 = doc.get_double("lambda0");
    inst.params.m = static_cast<int>(doc.get_int("m"));
    const long long n_apps = doc.get_int("apps");
    if (n_apps < 1 || n_apps > 255) throw ParseError("apps must lie in [1, 255]");
    inst.apps.resize(static_cast<std::size_t>(n_apps));
    for (int n = 0; n < n_apps; ++n) {
        const std::string prefix = "app." + std::to_string(n + 1);
        const long long k_n = doc.get_int(prefix + ".tasks");
        if (k_n < 1 || k_n > 1000) throw ParseError(prefix + ".tasks must lie in [1, 1000]");
        for (int k = 0; k < k_n; ++k) {
            const std::string key = "task." + std::to_string(n + 1) + "." + std::to_string(k + 1);
            const auto fields = split_fields(doc.get(key), " \t");
            if (fields.size() != 2) throw ParseError(key + ": expected '<size_bits> <gen_time>'");
            inst.apps[static_cast<std::size_t>(n)].push_back(
                {n, k, parse_double(fields[0], key + " size_bits"), parse_double(fields[1], key + " gen_time")});
        }
    }
    for (const auto& field : split_fields(doc.get("channel"), " \t"))
        inst.channel.gains.push_back(parse_double(field, "channel"));
    doc.require_all_used();
    require_valid(inst);
    return inst;
}

inline Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file '" + path + "'");
    return read_instance(in);
}

inline void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    write_instance(out, inst);
    if (!out) throw IoError("write to '" + path + "' failed");
}

/// Writes every decision of a schedule; E is the slot's energy under the
/// instance's channel.
inline void write_schedule_csv(std::ostream& os, const Instance& inst, const Schedule& sched) {
    os << "t,n,k,d_loc,d_off,E\n";
    for (const auto& d : sched.decisions) {
        os << d.slot << ',';
        if (d.task) {
            os << d.task->app + 1 << ',' << d.task->index + 1 << ',';
        } else {
            os << ",,";
        }
        const double e = d.task ? slot_energy(d.d_loc, d.d_off, inst.channel.at(d.slot), inst.params) : 0.0;
        os << format_csv(d.d_loc) << ',' << format_csv(d.d_off) << ',' << format_csv(e) << '\n';
    }
}

/// Reads a schedule CSV. Completion slots are rebuilt by replaying the
/// volumes against the instance's task sizes; the E column is ignored.
inline Schedule read_schedule_csv(std::istream& in, const Instance& inst) {
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != "t,n,k,d_loc,d_off,E")
        throw ParseError("schedule CSV must start with header 't,n,k,d_loc,d_off,E'");
    Schedule sched;
    std::map<TaskId, double> done;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        if (cols.size() != 6) throw ParseError("schedule line " + std::to_string(lineno) + ": expected 6 columns");
        const std::string where = "schedule line " + std::to_string(lineno);
        SlotDecision d;
        d.slot = static_cast<int>(parse_int(cols[0], where + " t"));
        const bool idle = detail::trim(cols[1]).empty() && detail::trim(cols[2]).empty();
        if (!idle) {
            const auto n = parse_int(cols[1], where + " n");
            const auto k = parse_int(cols[2], where + " k");
            d.task = TaskId{static_cast<int>(n - 1), static_cast<int>(k - 1)};
        }
        d.d_loc = parse_double(cols[3], where + " d_loc");
        d.d_off = parse_double(cols[4], where + " d_off");
        sched.decisions.push_back(d);
        if (d.task && d.task->app >= 0 && d.task->app < inst.num_apps() && d.task->index >= 0 &&
            d.task->index < inst.num_tasks(d.task->app)) {
            double& acc = done[*d.task];
            const double before = acc;
            acc += d.d_loc + d.d_off;
            const double size = inst.task(*d.task).size_bits;
            if (before < size - kBitTolerance && acc >= size - kBitTolerance) sched.completion_slots[*d.task] = d.slot;
        }
    }
    return sched;
}

} // namespace aotsched
