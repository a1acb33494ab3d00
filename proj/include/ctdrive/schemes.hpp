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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ctdrive/core.hpp"

namespace ctd {

using RealFn = std::function<double(double)>;

// Two-level control: H0 = 1/2 [[Delta, Wr e^{-i phi}], [Wr e^{i phi}, -Delta]].
// Level 0 is the ground state (1,0). coupling_phase 0 drives sigma_x,
// pi/2 drives sigma_y. Schemes carry analytic derivatives so the hot
// paths never differentiate numerically.
struct TwoLevelScheme {
    RealFn rabi;
    RealFn rabi_dot;
    RealFn detuning;
    RealFn detuning_dot;
    double t_start = 0.0;
    double t_end = 0.0;
    double coupling_phase = 0.0;
};

// Three-level ladder in the bare basis (|1>,|2>,|3>):
// H0 = 1/2 [[0, Wp, 0], [Wp, 2 Delta, Ws], [0, Ws, 0]] with constant Delta.
struct ThreeLevelScheme {
    RealFn pump;
    RealFn pump_dot;
    RealFn stokes;
    RealFn stokes_dot;
    double delta = 0.0;
    double t_start = 0.0;
    double t_end = 0.0;
};

struct PulseSequence {
    std::vector<std::pair<TwoLevelScheme, double>> segments;  // scheme, duration
    double total_duration = 0.0;
};

// Wr = W0 sech(pi t / 2 t0), Delta = (2 b^2 t0 / pi) tanh(pi t / 2 t0),
// truncated to a symmetric window about t = 0.
TwoLevelScheme allen_eberly(double omega0, double beta, double t0,
                            double window_halfwidth);

// Constant Wr = W0 with Delta = sweep_rate * t.
TwoLevelScheme landau_zener(double omega0, double sweep_rate,
                            double t_start, double t_end);

// Constant drive over [0, duration]; a pi pulse is duration = pi / W0.
TwoLevelScheme square_pulse(double omega0, double delta, double duration,
                            double coupling_phase = 0.0);

// pi/2(x) pi(y) pi/2(x) at fixed amplitude; total duration 2 pi / W0.
PulseSequence composite_xyx(double omega0, double delta);

// Ws = W0 f(t), Wp = W0 f(t - tau_d), f = sin^4(pi t / T) on (0, T).
// Stokes precedes pump; the window is [0, T + tau_d].
ThreeLevelScheme stirap_sin4(double omega0, double T, double tau_d, double delta);

Matrix h0_two_level(const TwoLevelScheme& s, double t);
Matrix h0_three_level(const ThreeLevelScheme& s, double t);

HamiltonianFn h0_fn(const TwoLevelScheme& s);
HamiltonianFn h0_fn(const ThreeLevelScheme& s);
HamiltonianFn sequence_fn(const PulseSequence& seq);

}  // namespace ctd
