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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace ctd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using HamiltonianFn = std::function<Matrix(double)>;

// Hamiltonians are stored with hbar divided out: entries are angular
// frequencies (rad/us), times are us.

struct StateVector {
    Vector amplitudes;
    int dim() const { return static_cast<int>(amplitudes.size()); }
};

// v / ||v||; rejects the zero vector.
StateVector normalize(const Vector& v);

struct TimeGrid {
    double t_start;
    double t_end;
    int n_steps;  // uniform intervals; sample count is n_steps + 1

    TimeGrid(double t_start, double t_end, int n_steps);
    double dt() const { return (t_end - t_start) / n_steps; }
    int n_samples() const { return n_steps + 1; }
    double sample(int k) const { return k == n_steps ? t_end : t_start + k * dt(); }
};

struct Trajectory {
    TimeGrid grid;
    std::vector<Vector> states;                // one per sample
    std::vector<Eigen::VectorXd> populations;  // |c_j|^2 per sample
    double peak_norm_drift = 0.0;              // recorded by rk4 only
};

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // orthonormal columns
};

// Hermitian eigendecomposition with a deterministic gauge: each
// eigenvector's largest-magnitude entry is rotated to be real positive.
EigenSystem eigensystem_hermitian(const Matrix& m);

// exp(-i H dt) psi via the spectral decomposition of H.
Vector step_exponential(const Matrix& h, double dt, const Vector& psi);

enum class Method { MidpointExponential, Rk4 };

// Fixed-step propagation of i dpsi/dt = H(t) psi over the grid.
// MidpointExponential evaluates H at interval midpoints and applies
// step_exponential (unconditionally norm preserving). Rk4 is the classic
// fourth-order scheme kept as an independent cross-check; it renormalizes
// only when the norm drifts by more than 1e-10 and records the peak drift.
Trajectory evolve(const HamiltonianFn& h_fn, const StateVector& psi0,
                  const TimeGrid& grid, Method method = Method::MidpointExponential);

// Step count for which doubling changes terminal populations well below
// 1e-8 on the pulse catalog: max ||H(t)|| * dt < 0.01 rad, floor 4000.
int default_n_steps(const HamiltonianFn& h_fn, double t_start, double t_end);

// Largest |eigenvalue| of a Hermitian matrix.
double spectral_norm(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = 1e-12);

}  // namespace ctd
