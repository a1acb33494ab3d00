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

#include "ctdrive/adiabatic.hpp"

#include <cmath>
#include <stdexcept>

namespace ctd {

TwoLevelEigenstates eigenstates_two_level(const TwoLevelScheme& s, double t) {
    const double wr = s.rabi(t);
    const double d = s.detuning(t);
    const double w = std::hypot(wr, d);
    if (w == 0.0) {
        throw std::runtime_error("control field vanishes; mixing angle undefined");
    }
    const double theta = std::acos(std::clamp(-d / w, -1.0, 1.0));
    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    TwoLevelEigenstates e;
    e.lower = Vector(2);
    e.lower << c, -sn;
    e.upper = Vector(2);
    e.upper << sn, c;
    e.e_lower = -0.5 * w;
    e.e_upper = 0.5 * w;
    return e;
}

ThreeLevelEigenstates eigenstates_three_level(const ThreeLevelScheme& s, double t) {
    const MixingAngles3 a = mixing_angles_three_level(s, t);
    const double st = std::sin(a.theta), ct = std::cos(a.theta);
    const double sp = std::sin(a.phi), cp = std::cos(a.phi);
    ThreeLevelEigenstates e;
    e.minus = Vector(3);
    e.minus << st * cp, -sp, ct * cp;
    e.dark = Vector(3);
    e.dark << ct, 0.0, -st;
    e.plus = Vector(3);
    e.plus << st * sp, cp, ct * sp;
    const EigenSystem num = eigensystem_hermitian(h0_three_level(s, t));
    e.e_minus = num.values(0);
    e.e_dark = 0.0;
    e.e_plus = num.values(2);
    return e;
}

double adiabaticity_ratio(const TwoLevelScheme& s, double t) {
    const double w = std::hypot(s.rabi(t), s.detuning(t));
    if (w == 0.0) {
        throw std::runtime_error("control field vanishes; mixing angle undefined");
    }
    return 0.5 * std::abs(omega_a(s, t)) / w;
}

namespace {

void require_shared_window(double a0, double a1, double b0, double b1) {
    const double tol = 1e-9 * std::max(1.0, std::abs(b1 - b0));
    if (std::abs(a0 - b0) > tol || std::abs(a1 - b1) > tol) {
        throw std::invalid_argument("project_adiabatic: time window mismatch");
    }
}

}  // namespace

AdiabaticFrame project_adiabatic(const Trajectory& traj, const TwoLevelScheme& s) {
    require_shared_window(traj.grid.t_start, traj.grid.t_end, s.t_start, s.t_end);
    AdiabaticFrame f;
    f.amplitudes.reserve(traj.states.size());
    f.energies.reserve(traj.states.size());
    for (int k = 0; k < traj.grid.n_samples(); ++k) {
        const TwoLevelEigenstates e = eigenstates_two_level(s, traj.grid.sample(k));
        Vector amp(2);
        amp << e.lower.dot(traj.states[k]), e.upper.dot(traj.states[k]);
        Eigen::VectorXd en(2);
        en << e.e_lower, e.e_upper;
        f.amplitudes.push_back(amp);
        f.energies.push_back(en);
    }
    return f;
}

AdiabaticFrame project_adiabatic(const Trajectory& traj, const ThreeLevelScheme& s) {
    require_shared_window(traj.grid.t_start, traj.grid.t_end, s.t_start, s.t_end);
    // The pulses vanish at the window edges, where the mixing angles are
    // undefined; edge samples are evaluated a sliver inside the window.
    const double eps = 1e-9 * (s.t_end - s.t_start);
    AdiabaticFrame f;
    f.amplitudes.reserve(traj.states.size());
    f.energies.reserve(traj.states.size());
    for (int k = 0; k < traj.grid.n_samples(); ++k) {
        const double t =
            std::clamp(traj.grid.sample(k), s.t_start + eps, s.t_end - eps);
        const ThreeLevelEigenstates e = eigenstates_three_level(s, t);
        Vector amp(3);
        amp << e.minus.dot(traj.states[k]), e.dark.dot(traj.states[k]),
            e.plus.dot(traj.states[k]);
        Eigen::VectorXd en(3);
        en << e.e_minus, e.e_dark, e.e_plus;
        f.amplitudes.push_back(amp);
        f.energies.push_back(en);
    }
    return f;
}

std::vector<double> average_energy(const Trajectory& traj, const HamiltonianFn& h_fn) {
    std::vector<double> out;
    out.reserve(traj.states.size());
    for (int k = 0; k < traj.grid.n_samples(); ++k) {
        const Matrix h = h_fn(traj.grid.sample(k));
        const Complex val = traj.states[k].dot(h * traj.states[k]);
        out.push_back(val.real());
    }
    return out;
}

}  // namespace ctd
