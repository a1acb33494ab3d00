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

#include "ctdrive/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace ctd {

TwoLevelScheme allen_eberly(double omega0, double beta, double t0,
                            double window_halfwidth) {
    if (!(omega0 > 0.0) || !(beta > 0.0) || !(t0 > 0.0) || !(window_halfwidth > 0.0)) {
        throw std::invalid_argument("allen_eberly: parameters must be positive");
    }
    const double k = M_PI / (2.0 * t0);
    TwoLevelScheme s;
    s.rabi = [omega0, k](double t) { return omega0 / std::cosh(k * t); };
    s.rabi_dot = [omega0, k](double t) {
        return -omega0 * k * std::tanh(k * t) / std::cosh(k * t);
    };
    const double d_asym = 2.0 * beta * beta * t0 / M_PI;
    s.detuning = [d_asym, k](double t) { return d_asym * std::tanh(k * t); };
    s.detuning_dot = [beta, k](double t) {
        const double c = std::cosh(k * t);
        return beta * beta / (c * c);
    };
    s.t_start = -window_halfwidth;
    s.t_end = window_halfwidth;
    return s;
}

TwoLevelScheme landau_zener(double omega0, double sweep_rate,
                            double t_start, double t_end) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("landau_zener: omega0 must be positive");
    TwoLevelScheme s;
    s.rabi = [omega0](double) { return omega0; };
    s.rabi_dot = [](double) { return 0.0; };
    s.detuning = [sweep_rate](double t) { return sweep_rate * t; };
    s.detuning_dot = [sweep_rate](double) { return sweep_rate; };
    s.t_start = t_start;
    s.t_end = t_end;
    return s;
}

TwoLevelScheme square_pulse(double omega0, double delta, double duration,
                            double coupling_phase) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("square_pulse: omega0 must be positive");
    if (!(duration > 0.0)) throw std::invalid_argument("square_pulse: duration must be positive");
    TwoLevelScheme s;
    s.rabi = [omega0](double) { return omega0; };
    s.rabi_dot = [](double) { return 0.0; };
    s.detuning = [delta](double) { return delta; };
    s.detuning_dot = [](double) { return 0.0; };
    s.t_start = 0.0;
    s.t_end = duration;
    s.coupling_phase = coupling_phase;
    return s;
}

PulseSequence composite_xyx(double omega0, double delta) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("composite_xyx: omega0 must be positive");
    const double half = 0.5 * M_PI / omega0;
    PulseSequence seq;
    seq.segments.push_back({square_pulse(omega0, delta, half, 0.0), half});
    seq.segments.push_back({square_pulse(omega0, delta, 2.0 * half, 0.5 * M_PI), 2.0 * half});
    seq.segments.push_back({square_pulse(omega0, delta, half, 0.0), half});
    seq.total_duration = 4.0 * half;
    return seq;
}

ThreeLevelScheme stirap_sin4(double omega0, double T, double tau_d, double delta) {
    if (!(omega0 > 0.0) || !(T > 0.0)) {
        throw std::invalid_argument("stirap_sin4: omega0 and T must be positive");
    }
    if (!(tau_d > 0.0) || !(tau_d < T)) {
        throw std::invalid_argument("stirap_sin4: need 0 < tau_d < T");
    }
    auto f = [T](double t) {
        if (t <= 0.0 || t >= T) return 0.0;
        const double s = std::sin(M_PI * t / T);
        return s * s * s * s;
    };
    auto fdot = [T](double t) {
        if (t <= 0.0 || t >= T) return 0.0;
        const double s = std::sin(M_PI * t / T);
        return 4.0 * M_PI / T * s * s * s * std::cos(M_PI * t / T);
    };
    ThreeLevelScheme s;
    s.stokes = [omega0, f](double t) { return omega0 * f(t); };
    s.stokes_dot = [omega0, fdot](double t) { return omega0 * fdot(t); };
    s.pump = [omega0, f, tau_d](double t) { return omega0 * f(t - tau_d); };
    s.pump_dot = [omega0, fdot, tau_d](double t) { return omega0 * fdot(t - tau_d); };
    s.delta = delta;
    s.t_start = 0.0;
    s.t_end = T + tau_d;
    return s;
}

Matrix h0_two_level(const TwoLevelScheme& s, double t) {
    const double wr = s.rabi(t);
    const double d = s.detuning(t);
    const Complex coupling =
        0.5 * wr * std::exp(Complex(0.0, -1.0) * s.coupling_phase);
    Matrix m(2, 2);
    m << 0.5 * d, coupling, std::conj(coupling), -0.5 * d;
    return m;
}

Matrix h0_three_level(const ThreeLevelScheme& s, double t) {
    const double wp = s.pump(t);
    const double ws = s.stokes(t);
    Matrix m(3, 3);
    m << 0.0, 0.5 * wp, 0.0,
         0.5 * wp, s.delta, 0.5 * ws,
         0.0, 0.5 * ws, 0.0;
    return m;
}

HamiltonianFn h0_fn(const TwoLevelScheme& s) {
    return [s](double t) { return h0_two_level(s, t); };
}

HamiltonianFn h0_fn(const ThreeLevelScheme& s) {
    return [s](double t) { return h0_three_level(s, t); };
}

HamiltonianFn sequence_fn(const PulseSequence& seq) {
    return [seq](double t) {
        double start = 0.0;
        for (size_t i = 0; i < seq.segments.size(); ++i) {
            const double end = start + seq.segments[i].second;
            if (t <= end || i + 1 == seq.segments.size()) {
                return h0_two_level(seq.segments[i].first, t - start);
            }
            start = end;
        }
        throw std::logic_error("sequence_fn: empty sequence");
    };
}

}  // namespace ctd
