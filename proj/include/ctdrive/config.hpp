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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ctdrive/experiments.hpp"

namespace ctd {

// Flat key=value document; one dot level for scheme/scan parameters;
// '#' starts a comment. Unknown keys are rejected with the line number.
// Frequencies carry a _mhz suffix and are converted to angular units
// (f MHz -> 2 pi f rad/us); times carry _us. dimensionless = true selects
// the b = 1 parameterization (scheme.omega, scheme.tau).
struct RunConfig {
    std::string command;  // simulate | scan | synthesize | figure
    std::string figure_id;
    std::string out_dir = ".";
    int steps = 0;    // 0 = automatic resolution
    int threads = 0;  // 0 = hardware concurrency
    bool dimensionless = false;

    std::string scheme_name;
    std::vector<Protocol> protocols;  // scan
    std::string protocol;             // simulate

    ScanAxis axis = ScanAxis::RabiError;
    double grid_min = 0.0, grid_max = 0.0, grid_step = 0.0;
    bool eta_h0_only = false;

    // Resolved parameters, rad/us and us.
    double omega0 = 0.0;
    double beta = 0.0;
    double t0 = 0.0;
    double window_t0 = 8.0;
    double sweep_rate = 0.0;
    double duration = 0.0;
    double delta = 0.0;
    double big_t = 0.0;
    double tau_d = -1.0;  // < 0: default T/5
    double phase = 0.0;
    // Three-level parameters used by scans alongside two-level protocols.
    double stirap_omega0;
    double stirap_delta;
    double stirap_T;
    double stirap_delay_frac = 0.2;

    RunConfig();
};

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& msg);
};

// command_hint supplies the subcommand when the document omits the
// 'command' key; a conflicting key is an error.
RunConfig parse_config(const std::string& text,
                       const std::string& command_hint = "");

// Executes the configured command, writing <out>/<name>.csv and
// <out>/<name>.manifest.json. Returns 0 on success; on error writes a
// diagnostic and leaves no partial output.
int run(const RunConfig& cfg, std::ostream& diagnostics);

// Manifest payload without writing anything (exposed for tests).
std::string manifest_json(const RunConfig& cfg, int n_steps_used);

}  // namespace ctd
