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

#include <string>
#include <vector>

#include "ctdrive/adiabatic.hpp"
#include "ctdrive/core.hpp"
#include "ctdrive/counterdiabatic.hpp"
#include "ctdrive/schemes.hpp"

namespace ctd {

// Closed-form terminal excited population of the sech/tanh sweep in
// dimensionless form (w = W0/b, tau = t0 b):
//   P1 = 1 - sech^2(2 tau^2/pi) cos^2(tau sqrt(w^2 - 4 tau^2/pi^2)),
// with cos(ix) = cosh(x) continuing the expression past w = 2 tau/pi.
double p1_allen_eberly_analytic(double omega, double tau);

// Square-pulse transfer (W0/W)^2 sin^2(W t / 2), W = sqrt(Delta^2 + W0^2).
// The squared prefactor is the one validated by the propagation oracle.
double p1_square_pulse(double omega0, double delta, double t);

// Peak |Wa| over the scheme window (coarse scan plus local refinement).
double max_abs_omega_a(const TwoLevelScheme& s, int coarse_samples = 20001);

// Smallest dimensionless tau for which the auxiliary amplitude stays
// within the main drive amplitude, max_t |Wa| <= W0, found by bisection;
// tau_formula = pi / (4 w) is the small-angle estimate it is compared to.
struct MinimalTau {
    double tau_exact;
    double tau_formula;
};
MinimalTau minimal_tau(double omega);

enum class Protocol {
    AdiabaticH0,      // sech/tanh sweep, bare H0
    Shape,            // sweep plus counterdiabatic term
    RabiPi,           // resonant square pi pulse
    CompositeXyx,     // pi/2(x) pi(y) pi/2(x)
    Stirap,           // three-level, bare H0
    StirapShape,      // three-level plus 1-3 auxiliary coupling
    StirapShapeFull,  // three-level plus full auxiliary term
};

const std::vector<std::string>& protocol_names();
std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);
bool protocol_is_three_level(Protocol p);

enum class ScanAxis { RabiError, Detuning };

struct ScanSettings {
    // two-level sweep parameters
    double omega0;
    double beta;
    double t0;
    double window_t0;
    // three-level parameters
    double s_omega0;
    double s_delta;
    double s_T;
    double s_delay_frac;
    // Amplitude-error model: by default the error multiplies every applied
    // field (same laser chain); eta_h0_only restricts it to the bare drive.
    bool eta_h0_only = false;
    int n_steps_override = 0;
    int threads = 0;

    static ScanSettings defaults();
};

struct ScanPoint {
    double perturbation;
    std::string protocol;
    double fidelity;
    int resolution;
};

// A protocol instantiated as a concrete propagation problem.
struct ProtocolRun {
    HamiltonianFn h;
    double t_start;
    double t_end;
    Vector psi0;
    int target;  // bare level whose terminal population is the fidelity
};

ProtocolRun protocol_run(ScanAxis axis, Protocol p, double pert,
                         const ScanSettings& st);

// Terminal target-level population under one protocol with the
// perturbation applied per the scan axis: RabiError scales amplitudes by
// (1 + pert); Detuning shifts the bare detuning by pert while the
// synthesized auxiliary field stays at its nominal design.
double protocol_fidelity(ScanAxis axis, Protocol p, double pert,
                         const ScanSettings& st, int* resolution_out = nullptr);

// Grid points are independent; they are distributed over a worker pool and
// written back by index, so the row order (grid-major, protocol inner) and
// the bytes of the result never depend on the worker count.
std::vector<ScanPoint> run_scan(ScanAxis axis, const std::vector<Protocol>& protocols,
                                const std::vector<double>& grid,
                                const ScanSettings& st);

// Smallest pulse duration for which the bare three-level transfer reaches
// the threshold (geometric bracketing, then bisection).
double stirap_min_T(double omega0, double delta, double delay_frac,
                    double threshold = 0.999, int steps_override = 0);

struct FigureRow {
    double x;  // time, scaled time, or perturbation
    std::string series;
    double value;
};

struct FigureData {
    std::vector<FigureRow> rows;
    std::string description;
    int n_steps_used = 0;
};

const std::vector<std::string>& figure_ids();

// Benchmark datasets at pinned parameters; see README for the catalog.
FigureData reproduce_figure(const std::string& id, int steps_override = 0);

}  // namespace ctd
