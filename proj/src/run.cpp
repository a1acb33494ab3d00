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

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ctdrive/config.hpp"
#include "ctdrive/io.hpp"

namespace ctd {

namespace {

using nlohmann::json;

ScanSettings settings_from(const RunConfig& cfg) {
    ScanSettings st = ScanSettings::defaults();
    st.omega0 = cfg.omega0;
    st.beta = cfg.beta;
    st.t0 = cfg.t0;
    st.window_t0 = cfg.window_t0;
    st.s_omega0 = cfg.stirap_omega0;
    st.s_delta = cfg.stirap_delta;
    st.s_T = cfg.stirap_T;
    st.s_delay_frac = cfg.stirap_delay_frac;
    st.eta_h0_only = cfg.eta_h0_only;
    st.n_steps_override = cfg.steps;
    st.threads = cfg.threads;
    return st;
}

std::vector<double> config_grid(const RunConfig& cfg) {
    const int count =
        static_cast<int>(std::lround((cfg.grid_max - cfg.grid_min) / cfg.grid_step)) + 1;
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = cfg.grid_min + i * cfg.grid_step;
    return g;
}

struct Output {
    std::string csv;
    int n_steps_used = 0;
};

Output do_scan(const RunConfig& cfg) {
    const auto rows = run_scan(cfg.axis, cfg.protocols, config_grid(cfg), settings_from(cfg));
    Output out;
    std::string& csv = out.csv;
    csv = "perturbation,protocol,fidelity,resolution\n";
    for (const auto& r : rows) {
        csv += format_double(r.perturbation) + "," + r.protocol + "," +
               format_double(r.fidelity) + "," + std::to_string(r.resolution) + "\n";
        out.n_steps_used = std::max(out.n_steps_used, r.resolution);
    }
    return out;
}

Output do_figure(const RunConfig& cfg) {
    const FigureData fig = reproduce_figure(cfg.figure_id, cfg.steps);
    Output out;
    out.n_steps_used = fig.n_steps_used;
    out.csv = "t_or_T,series_name,value\n";
    for (const auto& r : fig.rows) {
        out.csv += format_double(r.x) + "," + r.series + "," + format_double(r.value) + "\n";
    }
    return out;
}

Output do_simulate(const RunConfig& cfg) {
    const ProtocolRun run =
        protocol_run(ScanAxis::RabiError, cfg.protocols.at(0), 0.0, settings_from(cfg));
    const int n =
        cfg.steps > 0 ? cfg.steps : default_n_steps(run.h, run.t_start, run.t_end);
    const Trajectory traj =
        evolve(run.h, StateVector{run.psi0}, TimeGrid(run.t_start, run.t_end, n));
    Output out;
    out.n_steps_used = n;
    out.csv = "t_or_T,series_name,value\n";
    const int stride = std::max(1, n / 1000);
    std::vector<int> samples;
    for (int k = 0; k < traj.grid.n_samples(); k += stride) samples.push_back(k);
    if (samples.back() != n) samples.push_back(n);
    const int d = static_cast<int>(run.psi0.size());
    for (int k : samples) {
        for (int j = 0; j < d; ++j) {
            out.csv += format_double(traj.grid.sample(k)) + ",P" + std::to_string(j + 1) +
                       "," + format_double(traj.populations[k](j)) + "\n";
        }
    }
    return out;
}

Output do_synthesize(const RunConfig& cfg) {
    Output out;
    out.csv = "t,value,value_over_omega0\n";
    const int n = cfg.steps > 0 ? cfg.steps : 600;
    out.n_steps_used = n;
    double t_start = 0.0, t_end = 0.0, omega0 = cfg.omega0;
    std::function<double(double)> value;
    if (cfg.scheme_name == "allen-eberly") {
        const TwoLevelScheme s =
            allen_eberly(cfg.omega0, cfg.beta, cfg.t0, cfg.window_t0 * cfg.t0);
        t_start = s.t_start;
        t_end = s.t_end;
        value = [s](double t) { return omega_a(s, t); };
    } else if (cfg.scheme_name == "landau-zener") {
        const TwoLevelScheme s =
            landau_zener(cfg.omega0, cfg.sweep_rate, cfg.t0, cfg.duration);
        t_start = s.t_start;
        t_end = s.t_end;
        value = [s](double t) { return omega_a(s, t); };
    } else if (cfg.scheme_name == "square-pi") {
        const TwoLevelScheme s =
            square_pulse(cfg.omega0, cfg.delta, cfg.duration, cfg.phase);
        t_start = s.t_start;
        t_end = s.t_end;
        value = [s](double t) { return omega_a(s, t); };
    } else if (cfg.scheme_name == "composite-xyx") {
        // Piecewise-constant segments: the mixing angle is static inside
        // each segment, so the auxiliary amplitude vanishes.
        t_start = 0.0;
        t_end = cfg.duration;
        value = [](double) { return 0.0; };
    } else {  // stirap-sin4
        const ThreeLevelScheme s = stirap_sin4(cfg.stirap_omega0, cfg.stirap_T,
                                               cfg.tau_d, cfg.stirap_delta);
        t_start = s.t_start;
        t_end = s.t_end;
        omega0 = cfg.stirap_omega0;
        value = [s](double t) {
            if (s.pump(t) == 0.0 && s.stokes(t) == 0.0) return 0.0;
            return omega_a_prime(s, t);
        };
    }
    for (int k = 0; k <= n; ++k) {
        const double t = t_start + (t_end - t_start) * k / n;
        const double v = value(t);
        out.csv += format_double(t) + "," + format_double(v) + "," +
                   format_double(v / omega0) + "\n";
    }
    return out;
}

json parameters_json(const RunConfig& cfg) {
    json p;
    p["omega0_rad_per_us"] = cfg.omega0;
    p["beta_rad_per_us"] = cfg.beta;
    p["t0_us"] = cfg.t0;
    p["window_t0"] = cfg.window_t0;
    p["omega"] = cfg.omega0 / cfg.beta;
    p["tau"] = cfg.t0 * cfg.beta;
    p["stirap_omega0_rad_per_us"] = cfg.stirap_omega0;
    p["stirap_delta_rad_per_us"] = cfg.stirap_delta;
    p["stirap_T_us"] = cfg.stirap_T;
    p["stirap_delay_frac"] = cfg.stirap_delay_frac;
    if (cfg.command == "scan") {
        p["scan_axis"] = cfg.axis == ScanAxis::RabiError ? "eta" : "delta";
        p["grid_min"] = cfg.grid_min;
        p["grid_max"] = cfg.grid_max;
        p["grid_step"] = cfg.grid_step;
        p["eta_scaling"] = cfg.eta_h0_only ? "h0-only" : "all";
        json names = json::array();
        for (Protocol pr : cfg.protocols) names.push_back(protocol_name(pr));
        p["protocols"] = names;
    }
    if (cfg.command == "simulate") p["protocol"] = cfg.protocol;
    if (cfg.command == "synthesize") {
        p["scheme"] = cfg.scheme_name;
        if (cfg.scheme_name == "landau-zener") p["sweep_rate_rad_per_us2"] = cfg.sweep_rate;
        if (cfg.scheme_name == "square-pi" || cfg.scheme_name == "composite-xyx") {
            p["delta_rad_per_us"] = cfg.delta;
            p["duration_us"] = cfg.duration;
        }
        if (cfg.scheme_name == "stirap-sin4") p["tau_d_us"] = cfg.tau_d;
    }
    if (cfg.command == "figure") p["figure"] = cfg.figure_id;
    return p;
}

}  // namespace

std::string manifest_json(const RunConfig& cfg, int n_steps_used) {
    json m;
    m["tool"] = "ctdrive";
    m["version"] = "0.1.0";
    m["command"] = cfg.command;
    m["integrator"] = "midpoint-exponential";
    m["n_steps"] = n_steps_used;
    m["steps_override"] = cfg.steps;
    m["parameters"] = parameters_json(cfg);
    // Timestamp-free: the hash of the resolved parameters fully determines
    // the output bytes.
    json hashed = m;
    hashed.erase("n_steps");
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(hashed.dump())));
    m["config_hash"] = std::string("fnv1a64:") + hex;
    return m.dump(2) + "\n";
}

int run(const RunConfig& cfg, std::ostream& diagnostics) {
    try {
        if (cfg.command.empty()) {
            throw std::invalid_argument("no command given (simulate|scan|synthesize|figure)");
        }
        Output out;
        if (cfg.command == "scan") {
            out = do_scan(cfg);
        } else if (cfg.command == "figure") {
            out = do_figure(cfg);
        } else if (cfg.command == "simulate") {
            out = do_simulate(cfg);
        } else if (cfg.command == "synthesize") {
            out = do_synthesize(cfg);
        } else {
            throw std::invalid_argument("unknown command '" + cfg.command + "'");
        }
        std::filesystem::create_directories(cfg.out_dir);
        const std::string base = cfg.command == "figure" ? cfg.figure_id : cfg.command;
        write_file_atomic(cfg.out_dir + "/" + base + ".csv", out.csv);
        write_file_atomic(cfg.out_dir + "/" + base + ".manifest.json",
                          manifest_json(cfg, out.n_steps_used));
        return 0;
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ctd
