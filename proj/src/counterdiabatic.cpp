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

#include "ctdrive/counterdiabatic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ctd {

namespace {
const Complex kI(0.0, 1.0);
}

double omega_a(const TwoLevelScheme& s, double t) {
    const double wr = s.rabi(t);
    const double d = s.detuning(t);
    const double w2 = wr * wr + d * d;
    if (w2 == 0.0) {
        throw std::runtime_error("control field vanishes; mixing angle undefined");
    }
    return (wr * s.detuning_dot(t) - s.rabi_dot(t) * d) / w2;
}

Matrix h1_two_level(const TwoLevelScheme& s, double t) {
    const double wa = omega_a(s, t);
    // -1/2 Wa sigma_y rotated by the coupling phase about z.
    const Complex upper =
        0.5 * wa * kI * std::exp(Complex(0.0, -1.0) * s.coupling_phase);
    Matrix m(2, 2);
    m << 0.0, upper, std::conj(upper), 0.0;
    return m;
}

MixingAngles3 mixing_angles_three_level(const ThreeLevelScheme& s, double t) {
    const double wp = s.pump(t);
    const double ws = s.stokes(t);
    const double w2 = wp * wp + ws * ws;
    if (w2 == 0.0) {
        throw std::runtime_error("control field vanishes; mixing angle undefined");
    }
    const double w = std::sqrt(w2);
    const double dwp = s.pump_dot(t);
    const double dws = s.stokes_dot(t);
    MixingAngles3 a;
    a.theta = std::atan2(wp, ws);
    a.phi = 0.5 * std::atan2(w, s.delta);
    a.theta_dot = (dwp * ws - dws * wp) / w2;
    a.phi_dot = (dwp * wp + dws * ws) * s.delta / (2.0 * w * (s.delta * s.delta + w2));
    return a;
}

Matrix h1_three_level_full(const ThreeLevelScheme& s, double t) {
    const MixingAngles3 a = mixing_angles_three_level(s, t);
    const double st = std::sin(a.theta);
    const double ct = std::cos(a.theta);
    Matrix m(3, 3);
    m << 0.0, kI * a.phi_dot * st, kI * a.theta_dot,
        -kI * a.phi_dot * st, 0.0, -kI * a.phi_dot * ct,
        -kI * a.theta_dot, kI * a.phi_dot * ct, 0.0;
    return m;
}

double omega_a_prime(const ThreeLevelScheme& s, double t) {
    return 2.0 * mixing_angles_three_level(s, t).theta_dot;
}

Matrix h1_three_level_simplified(const ThreeLevelScheme& s, double t) {
    const double wa = omega_a_prime(s, t);
    Matrix m = Matrix::Zero(3, 3);
    m(0, 2) = 0.5 * kI * wa;
    m(2, 0) = -0.5 * kI * wa;
    return m;
}

Matrix cd_generic(const HamiltonianFn& h_fn, double t, double h,
                  unsigned gauge_shuffle_seed) {
    if (!(h > 0.0)) throw std::invalid_argument("cd_generic: step h must be positive");
    EigenSystem minus = eigensystem_hermitian(h_fn(t - h));
    EigenSystem center = eigensystem_hermitian(h_fn(t));
    EigenSystem plus = eigensystem_hermitian(h_fn(t + h));

    const Eigen::Index d = center.vectors.cols();
    const double hdot_norm = spectral_norm((h_fn(t + h) - h_fn(t - h)) / (2.0 * h));
    double min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index n = 1; n < d; ++n) {
        min_gap = std::min(min_gap, center.values(n) - center.values(n - 1));
    }
    if (min_gap < 1e3 * h * hdot_norm) {
        throw std::runtime_error("near-degeneracy; derivative unreliable");
    }

    if (gauge_shuffle_seed != 0) {
        std::mt19937 rng(gauge_shuffle_seed);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        for (Eigen::Index n = 0; n < d; ++n) {
            minus.vectors.col(n) *= std::exp(kI * angle(rng));
            center.vectors.col(n) *= std::exp(kI * angle(rng));
            plus.vectors.col(n) *= std::exp(kI * angle(rng));
        }
    }

    // Parallel transport: align center and plus to minus so the central
    // difference is taken in a smooth gauge.
    auto align = [](const Vector& ref, Vector col) {
        const Complex ov = ref.dot(col);  // <ref|col>
        const double a = std::abs(ov);
        if (a > 0.0) col *= std::conj(ov) / a;
        return col;
    };
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        const Vector vm = minus.vectors.col(n);
        const Vector vc = align(vm, center.vectors.col(n));
        const Vector vp = align(vm, plus.vectors.col(n));
        const Vector dv = (vp - vm) / (2.0 * h);
        const Complex berry = vc.dot(dv);  // <l_n|d_t l_n>
        m += kI * (dv * vc.adjoint() - berry * (vc * vc.adjoint()));
    }
    return 0.5 * (m + m.adjoint());
}

HamiltonianFn shape_fn(const TwoLevelScheme& s) {
    return [s](double t) -> Matrix {
        return h0_two_level(s, t) + h1_two_level(s, t);
    };
}

HamiltonianFn stirap_shape_fn(const ThreeLevelScheme& s, bool full_coupling) {
    return [s, full_coupling](double t) -> Matrix {
        Matrix m = h0_three_level(s, t);
        const double wp = s.pump(t);
        const double ws = s.stokes(t);
        if (wp == 0.0 && ws == 0.0) return m;  // outside the pulses
        m += full_coupling ? h1_three_level_full(s, t)
                           : h1_three_level_simplified(s, t);
        return m;
    };
}

}  // namespace ctd
