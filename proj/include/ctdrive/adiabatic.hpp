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

#include <vector>

#include "ctdrive/core.hpp"
#include "ctdrive/counterdiabatic.hpp"
#include "ctdrive/schemes.hpp"

namespace ctd {

// Instantaneous eigenpairs of h0_two_level in the analytic gauge.
// With theta = arccos(-Delta/W):
//   |lower> = (cos(theta/2), -sin(theta/2)),  E = -W/2
//   |upper> = (sin(theta/2),  cos(theta/2)),  E = +W/2
// (components in the bare basis; valid for coupling_phase = 0).
struct TwoLevelEigenstates {
    Vector lower;
    Vector upper;
    double e_lower;
    double e_upper;
};

TwoLevelEigenstates eigenstates_two_level(const TwoLevelScheme& s, double t);

// Instantaneous eigenbasis of h0_three_level:
//   |minus> = (sin th cos ph, -sin ph, cos th cos ph)
//   |dark>  = (cos th, 0, -sin th), E = 0 exactly
//   |plus>  = (sin th sin ph, cos ph, cos th sin ph)
// E_minus/E_plus come from numeric diagonalization.
struct ThreeLevelEigenstates {
    Vector minus;
    Vector dark;
    Vector plus;
    double e_minus;
    double e_dark;
    double e_plus;
};

ThreeLevelEigenstates eigenstates_three_level(const ThreeLevelScheme& s, double t);

// 1/2 |Wa| / |W|; adiabatic regime when well below 1 (reporting threshold 0.1).
double adiabaticity_ratio(const TwoLevelScheme& s, double t);

// Per sample: adiabatic-frame amplitudes <l_n|psi> in ascending-energy
// order, together with the instantaneous energies.
struct AdiabaticFrame {
    std::vector<Vector> amplitudes;
    std::vector<Eigen::VectorXd> energies;
};

AdiabaticFrame project_adiabatic(const Trajectory& traj, const TwoLevelScheme& s);
AdiabaticFrame project_adiabatic(const Trajectory& traj, const ThreeLevelScheme& s);

// <psi(t)|H(t)|psi(t)> per sample.
std::vector<double> average_energy(const Trajectory& traj, const HamiltonianFn& h_fn);

}  // namespace ctd
