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

#include "ctdrive/core.hpp"
#include "ctdrive/schemes.hpp"

namespace ctd {

// Auxiliary Rabi frequency Wa = (Wr dDelta - dWr Delta) / (Delta^2 + Wr^2),
// i.e. the rate of the instantaneous mixing angle. Errors when the control
// field vanishes (mixing angle undefined).
double omega_a(const TwoLevelScheme& s, double t);

// Counterdiabatic two-level term: purely off-diagonal imaginary, driving
// the quadrature orthogonal to the scheme's coupling phase:
//   H1 = -1/2 Wa (cos(phi) sigma_y - sin(phi) sigma_x).
// The sign is fixed by requiring exact transport along the instantaneous
// eigenstates of h0_two_level; it is cross-validated against cd_generic.
Matrix h1_two_level(const TwoLevelScheme& s, double t);

struct MixingAngles3 {
    double theta;      // atan2(Wp, Ws) in [0, pi/2]
    double phi;        // 2 phi = atan2(W, Delta) in (0, pi)
    double theta_dot;  // (dWp Ws - dWs Wp) / W^2
    double phi_dot;    // (dWp Wp + dWs Ws) Delta / (2 W (Delta^2 + W^2))
};

MixingAngles3 mixing_angles_three_level(const ThreeLevelScheme& s, double t);

// Full counterdiabatic three-level term,
//   H1 = i [[0, dphi sin(theta), dtheta],
//           [-dphi sin(theta), 0, -dphi cos(theta)],
//           [-dtheta, dphi cos(theta), 0]].
Matrix h1_three_level_full(const ThreeLevelScheme& s, double t);

// 1-3 coupling only: H1' = 1/2 [[0,0,i Wa'],[0,0,0],[-i Wa',0,0]],
// Wa' = 2 dtheta. The dphi couplings connect bright states with equal and
// opposite amplitudes and may be dropped without changing the dark-state
// amplitude magnitude.
Matrix h1_three_level_simplified(const ThreeLevelScheme& s, double t);

double omega_a_prime(const ThreeLevelScheme& s, double t);

// Numeric counterdiabatic synthesis for a generic non-degenerate H(t):
//   H1 = i sum_n (|d_t l_n><l_n| - <l_n|d_t l_n>|l_n><l_n|)
// with eigenvectors gauge-aligned between t-h and t+h (parallel transport)
// and derivatives by central difference; the result is Hermitized.
// gauge_shuffle_seed != 0 multiplies each oracle eigenvector by a random
// phase first — the output must not change (test hook).
Matrix cd_generic(const HamiltonianFn& h_fn, double t, double h,
                  unsigned gauge_shuffle_seed = 0);

// H0 + H1 as a single time-dependent Hamiltonian.
HamiltonianFn shape_fn(const TwoLevelScheme& s);
HamiltonianFn stirap_shape_fn(const ThreeLevelScheme& s, bool full_coupling);

}  // namespace ctd
