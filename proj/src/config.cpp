// Copyright 2026 The ctdrive Authors
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

#include "ctdrive/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace ctd {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

RunConfig::RunConfig() {
    const ScanSettings d = ScanSettings::defaults();
    omega0 = d.omega0;
    beta = d.beta;
    t0 = d.t0;
    window_t0 = d.window_t0;
    stirap_omega0 = d.s_omega0;
    stirap_delta = d.s_delta;
    stirap_T = d.s_T;
    stirap_delay_frac = d.s_delay_frac;
}

ConfigError::ConfigError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

namespace {

struct Entry {
    std::string value;
    int line;
    bool used = false;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

class Doc {
  public:
    explicit Doc(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string s = trim(raw);
            if (s.empty()) continue;
            const auto eq = s.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(line, "expected 'key = value'");
            }
            const std::string key = trim(s.substr(0, eq));
            const std::string value = trim(s.substr(eq + 1));
            if (key.empty()) throw ConfigError(line, "empty key");
            if (value.empty()) throw ConfigError(line, "empty value for key '" + key + "'");
            if (entries_.count(key)) {
                throw ConfigError(line, "duplicate key '" + key + "'");
            }
            entries_[key] = Entry{value, line};
        }
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string str(const std::string& key) {
        auto& e = entries_.at(key);
        e.used = true;
        return e.value;
    }

    std::string str_or(const std::string& key, const std::string& dflt) {
        return has(key) ? str(key) : dflt;
    }

    double num(const std::string& key) {
        auto& e = entries_.at(key);
        e.used = true;
        const char* begin = e.value.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end != begin + e.value.size() || !std::isfinite(v)) {
            throw ConfigError(e.line, "key '" + key + "': not a number: '" + e.value + "'");
        }
        return v;
    }

    double num_or(const std::string& key, double dflt) {
        return has(key) ? num(key) : dflt;
    }

    double positive(const std::string& key) {
        const double v = num(key);
        if (!(v > 0.0)) {
            throw ConfigError(entries_.at(key).line,
                              "key '" + key + "': must be strictly positive");
        }
        return v;
    }

    double positive_or(const std::string& key, double dflt) {
        return has(key) ? positive(key) : dflt;
    }

    int integer(const std::string& key) {
        const double v = num(key);
        const int i = static_cast<int>(v);
        if (i != v || i <= 0) {
            throw ConfigError(entries_.at(key).line,
                              "key '" + key + "': must be a positive integer");
        }
        return i;
    }

    bool boolean(const std::string& key) {
        auto& e = entries_.at(key);
        e.used = true;
        if (e.value == "true") return true;
        if (e.value == "false") return false;
        throw ConfigError(e.line, "key '" + key + "': expected true or false");
    }

    int line_of(const std::string& key) const { return entries_.at(key).line; }

    void fail(const std::string& key, const std::string& msg) const {
        throw ConfigError(entries_.at(key).line, "key '" + key + "': " + msg);
    }

    void reject_unused() const {
        const Entry* first = nullptr;
        std::string key;
        for (const auto& [k, e] : entries_) {
            if (!e.used && (!first || e.line < first->line)) {
                first = &e;
                key = k;
            }
        }
        if (first) {
            throw ConfigError(first->line, "unknown or inapplicable key '" + key + "'");
        }
    }

  private:
    std::map<std::string, Entry> entries_;
};

void read_two_level_scheme(Doc& doc, RunConfig& cfg) {
    if (cfg.dimensionless) {
        // b = 1 units: omega = W0/b, tau = t0 b.
        cfg.beta = 1.0;
        cfg.omega0 = doc.positive("scheme.omega");
        cfg.t0 = doc.positive("scheme.tau");
    } else {
        cfg.omega0 = kTwoPi * doc.positive_or("scheme.omega0_mhz", cfg.omega0 / kTwoPi);
        cfg.beta = kTwoPi * doc.positive_or("scheme.beta_mhz", cfg.beta / kTwoPi);
        cfg.t0 = doc.positive_or("scheme.t0_us", cfg.t0);
    }
    cfg.window_t0 = doc.positive_or("scheme.window_t0", cfg.window_t0);
}

void read_stirap_overrides(Doc& doc, RunConfig& cfg) {
    cfg.stirap_omega0 = kTwoPi * doc.positive_or("stirap.omega0_mhz", cfg.stirap_omega0 / kTwoPi);
    cfg.stirap_delta = kTwoPi * doc.num_or("stirap.delta_mhz", cfg.stirap_delta / kTwoPi);
    cfg.stirap_T = doc.positive_or("stirap.T_us", cfg.stirap_T);
    cfg.stirap_delay_frac = doc.positive_or("stirap.delay_frac", cfg.stirap_delay_frac);
    if (!(cfg.stirap_delay_frac < 1.0)) {
        doc.fail("stirap.delay_frac", "must be below 1");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& command_hint) {
    Doc doc(text);
    RunConfig cfg;
    cfg.command = command_hint;

    if (doc.has("command")) {
        const int line = doc.line_of("command");
        cfg.command = doc.str("command");
        if (cfg.command != "simulate" && cfg.command != "scan" &&
            cfg.command != "synthesize" && cfg.command != "figure") {
            doc.fail("command",
                     "unknown command; valid: simulate scan synthesize figure");
        }
        if (!command_hint.empty() && cfg.command != command_hint) {
            throw ConfigError(line, "config sets command '" + cfg.command +
                                        "' but '" + command_hint + "' was invoked");
        }
    }
    cfg.out_dir = doc.str_or("out", cfg.out_dir);
    if (doc.has("steps")) cfg.steps = doc.integer("steps");
    if (doc.has("threads")) cfg.threads = doc.integer("threads");
    if (doc.has("dimensionless")) cfg.dimensionless = doc.boolean("dimensionless");

    if (cfg.command == "figure" && doc.has("figure")) {
        cfg.figure_id = doc.str("figure");
        const auto& ids = figure_ids();
        if (std::find(ids.begin(), ids.end(), cfg.figure_id) == ids.end()) {
            std::string msg = "unknown figure id; valid ids:";
            for (const auto& f : ids) msg += " " + f;
            doc.fail("figure", msg);
        }
    }

    if (cfg.command == "scan") {
        const std::string axis = doc.str("scan.axis");
        if (axis == "eta") {
            cfg.axis = ScanAxis::RabiError;
            cfg.grid_min = doc.num("scan.min");
            cfg.grid_max = doc.num("scan.max");
            cfg.grid_step = doc.positive("scan.step");
            if (cfg.grid_min <= -1.0) doc.fail("scan.min", "amplitude error must exceed -1");
        } else if (axis == "delta") {
            cfg.axis = ScanAxis::Detuning;
            cfg.grid_min = kTwoPi * doc.num("scan.min_mhz");
            cfg.grid_max = kTwoPi * doc.num("scan.max_mhz");
            cfg.grid_step = kTwoPi * doc.positive("scan.step_mhz");
        } else {
            doc.fail("scan.axis", "expected eta or delta");
        }
        if (!(cfg.grid_max > cfg.grid_min)) doc.fail("scan.axis", "empty grid");
        const std::string scaling = doc.str_or("scan.eta_scaling", "all");
        if (scaling == "h0-only") {
            cfg.eta_h0_only = true;
        } else if (scaling != "all") {
            doc.fail("scan.eta_scaling", "expected all or h0-only");
        }
        std::string plist = doc.str_or("protocols", "adiabatic,shape,rabi-pi,composite-xyx");
        std::istringstream ps(plist);
        std::string name;
        while (std::getline(ps, name, ',')) {
            name = trim(name);
            if (name.empty()) continue;
            try {
                cfg.protocols.push_back(protocol_from_name(name));
            } catch (const std::invalid_argument& e) {
                if (doc.has("protocols")) doc.fail("protocols", e.what());
                throw;
            }
        }
        if (cfg.protocols.empty()) doc.fail("protocols", "no protocols selected");
        if (doc.has("scheme") && doc.str("scheme") != "allen-eberly") {
            doc.fail("scheme", "scans sweep the allen-eberly scheme");
        }
        read_two_level_scheme(doc, cfg);
        read_stirap_overrides(doc, cfg);
    }

    if (cfg.command == "simulate") {
        const std::string name = doc.str("protocol");
        try {
            cfg.protocols = {protocol_from_name(name)};
        } catch (const std::invalid_argument& e) {
            doc.fail("protocol", e.what());
        }
        cfg.protocol = name;
        read_two_level_scheme(doc, cfg);
        read_stirap_overrides(doc, cfg);
    }

    if (cfg.command == "synthesize") {
        cfg.scheme_name = doc.str("scheme");
        if (cfg.scheme_name == "allen-eberly") {
            read_two_level_scheme(doc, cfg);
        } else if (cfg.scheme_name == "landau-zener") {
            cfg.omega0 = kTwoPi * doc.positive("scheme.omega0_mhz");
            cfg.sweep_rate = kTwoPi * doc.num("scheme.sweep_rate_mhz_per_us");
            cfg.t0 = doc.num("scheme.t_start_us");
            cfg.duration = doc.num("scheme.t_end_us");
            if (!(cfg.duration > cfg.t0)) doc.fail("scheme.t_end_us", "window is empty");
        } else if (cfg.scheme_name == "square-pi") {
            cfg.omega0 = kTwoPi * doc.positive("scheme.omega0_mhz");
            cfg.delta = kTwoPi * doc.num_or("scheme.delta_mhz", 0.0);
            cfg.duration = doc.positive_or("scheme.duration_us", M_PI / cfg.omega0);
            cfg.phase = doc.num_or("scheme.phase_rad", 0.0);
        } else if (cfg.scheme_name == "composite-xyx") {
            cfg.omega0 = kTwoPi * doc.positive("scheme.omega0_mhz");
            cfg.delta = kTwoPi * doc.num_or("scheme.delta_mhz", 0.0);
            cfg.duration = 2.0 * M_PI / cfg.omega0;
        } else if (cfg.scheme_name == "stirap-sin4") {
            cfg.stirap_omega0 = kTwoPi * doc.positive("scheme.omega0_mhz");
            cfg.stirap_delta = kTwoPi * doc.num_or("scheme.delta_mhz", 0.0);
            cfg.stirap_T = doc.positive("scheme.T_us");
            cfg.tau_d = doc.positive_or("scheme.tau_d_us", cfg.stirap_T / 5.0);
            if (!(cfg.tau_d < cfg.stirap_T)) doc.fail("scheme.tau_d_us", "must be below T");
        } else {
            doc.fail("scheme",
                     "unknown scheme; valid: allen-eberly landau-zener square-pi "
                     "composite-xyx stirap-sin4");
        }
    }

    doc.reject_unused();
    return cfg;
}

}  // namespace ctd
