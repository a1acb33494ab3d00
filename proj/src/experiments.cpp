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

#include "ctdrive/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ctd {

namespace {
const Complex kI(0.0, 1.0);
}

double p1_allen_eberly_analytic(double omega, double tau) {
    const double sech = 1.0 / std::cosh(2.0 * tau * tau / M_PI);
    const double arg = omega * omega - 4.0 * tau * tau / (M_PI * M_PI);
    const double c = arg >= 0.0 ? std::cos(tau * std::sqrt(arg))
                                : std::cosh(tau * std::sqrt(-arg));
    const double p = 1.0 - sech * sech * c * c;
    return std::clamp(p, 0.0, 1.0);
}

double p1_square_pulse(double omega0, double delta, double t) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("p1_square_pulse: omega0 must be positive");
    if (t < 0.0) throw std::invalid_argument("p1_square_pulse: t must be non-negative");
    const double w = std::hypot(omega0, delta);
    const double s = std::sin(0.5 * w * t);
    const double r = omega0 / w;
    return r * r * s * s;
}

double max_abs_omega_a(const TwoLevelScheme& s, int coarse_samples) {
    const double a = s.t_start, b = s.t_end;
    auto f = [&s](double t) { return std::abs(omega_a(s, t)); };
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i <= coarse_samples - 1; ++i) {
        const double t = a + (b - a) * i / (coarse_samples - 1);
        const double v = f(t);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    // Golden-section refinement inside the bracketing coarse cells.
    double lo = a + (b - a) * std::max(0, best - 1) / (coarse_samples - 1);
    double hi = a + (b - a) * std::min(coarse_samples - 1, best + 1) / (coarse_samples - 1);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (b - a); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        }
    }
    return std::max(best_val, std::max(f1, f2));
}

MinimalTau minimal_tau(double omega) {
    if (!(omega >= 1.0)) throw std::invalid_argument("minimal_tau: omega must be at least 1");
    const double tau_formula = M_PI / (4.0 * omega);
    auto excess = [omega](double tau) {
        const TwoLevelScheme s = allen_eberly(omega, 1.0, tau, 8.0 * tau);
        return max_abs_omega_a(s) - omega;
    };
    double lo = 0.25 * tau_formula, hi = 4.0 * tau_formula;
    if (!(excess(lo) > 0.0) || !(excess(hi) < 0.0)) {
        throw std::runtime_error("minimal_tau: bisection bracket failure");
    }
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return MinimalTau{0.5 * (lo + hi), tau_formula};
}

const std::vector<std::string>& protocol_names() {
    static const std::vector<std::string> names = {
        "adiabatic", "shape", "rabi-pi", "composite-xyx",
        "stirap", "stirap-shape", "stirap-shape-full"};
    return names;
}

std::string protocol_name(Protocol p) {
    return protocol_names()[static_cast<int>(p)];
}

Protocol protocol_from_name(const std::string& name) {
    const auto& names = protocol_names();
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Protocol>(i);
    }
    std::string msg = "unknown protocol '" + name + "'; valid names:";
    for (const auto& n : names) msg += " " + n;
    throw std::invalid_argument(msg);
}

bool protocol_is_three_level(Protocol p) {
    return p == Protocol::Stirap || p == Protocol::StirapShape ||
           p == Protocol::StirapShapeFull;
}

ScanSettings ScanSettings::defaults() {
    ScanSettings st;
    st.omega0 = 2.0 * M_PI * 5.0;  // rad/us
    st.beta = 2.0 * M_PI;
    st.t0 = 0.025;  // us
    st.window_t0 = 8.0;
    st.s_omega0 = 2.0 * M_PI * 5.0;
    st.s_delta = 2.0 * M_PI * 0.5;
    st.s_T = 0.26;
    st.s_delay_frac = 0.2;
    return st;
}

ProtocolRun protocol_run(ScanAxis axis, Protocol p, double pert,
                         const ScanSettings& st) {
    const double eta = axis == ScanAxis::RabiError ? pert : 0.0;
    const double del = axis == ScanAxis::Detuning ? pert : 0.0;
    const double scale = 1.0 + eta;
    if (axis == ScanAxis::RabiError && !(scale > 0.0)) {
        throw std::invalid_argument("run_scan: amplitude error must exceed -1");
    }
    ProtocolRun run;
    if (!protocol_is_three_level(p)) {
        run.psi0 = Vector(2);
        run.psi0 << 1.0, 0.0;
        run.target = 1;
        switch (p) {
            case Protocol::AdiabaticH0:
            case Protocol::Shape: {
                const TwoLevelScheme nominal =
                    allen_eberly(st.omega0, st.beta, st.t0, st.window_t0 * st.t0);
                const bool cd = p == Protocol::Shape;
                const double aux_scale = st.eta_h0_only ? 1.0 : scale;
                run.h = [nominal, scale, del, cd, aux_scale](double t) {
                    const double wr = scale * nominal.rabi(t);
                    const double d = nominal.detuning(t) + del;
                    Matrix m(2, 2);
                    m << 0.5 * d, 0.5 * wr, 0.5 * wr, -0.5 * d;
                    if (cd) {
                        // The auxiliary field keeps its design-time program;
                        // a detuning drift never reshapes it.
                        const double wa = aux_scale * omega_a(nominal, t);
                        m(0, 1) += 0.5 * kI * wa;
                        m(1, 0) += -0.5 * kI * wa;
                    }
                    return m;
                };
                run.t_start = nominal.t_start;
                run.t_end = nominal.t_end;
                break;
            }
            case Protocol::RabiPi: {
                const double duration = M_PI / st.omega0;  // nominal pi area
                const TwoLevelScheme seg =
                    square_pulse(scale * st.omega0, del, duration, 0.0);
                run.h = h0_fn(seg);
                run.t_start = 0.0;
                run.t_end = duration;
                break;
            }
            case Protocol::CompositeXyx: {
                const double half = 0.5 * M_PI / st.omega0;  // nominal durations
                PulseSequence seq;
                seq.segments.push_back(
                    {square_pulse(scale * st.omega0, del, half, 0.0), half});
                seq.segments.push_back(
                    {square_pulse(scale * st.omega0, del, 2.0 * half, 0.5 * M_PI),
                     2.0 * half});
                seq.segments.push_back(
                    {square_pulse(scale * st.omega0, del, half, 0.0), half});
                seq.total_duration = 4.0 * half;
                run.h = sequence_fn(seq);
                run.t_start = 0.0;
                run.t_end = seq.total_duration;
                break;
            }
            default:
                throw std::logic_error("protocol_run: unreachable");
        }
    } else {
        run.psi0 = Vector(3);
        run.psi0 << 1.0, 0.0, 0.0;
        run.target = 2;
        const ThreeLevelScheme nominal = stirap_sin4(
            st.s_omega0, st.s_T, st.s_delay_frac * st.s_T, st.s_delta);
        const int aux = p == Protocol::Stirap ? 0 : (p == Protocol::StirapShape ? 1 : 2);
        const double aux_scale = st.eta_h0_only ? 1.0 : scale;
        run.h = [nominal, scale, del, aux, aux_scale](double t) {
            const double wp = scale * nominal.pump(t);
            const double ws = scale * nominal.stokes(t);
            const double d = nominal.delta + del;
            Matrix m(3, 3);
            m << 0.0, 0.5 * wp, 0.0, 0.5 * wp, d, 0.5 * ws, 0.0, 0.5 * ws, 0.0;
            if (aux != 0 && !(nominal.pump(t) == 0.0 && nominal.stokes(t) == 0.0)) {
                m += aux_scale * (aux == 1 ? h1_three_level_simplified(nominal, t)
                                           : h1_three_level_full(nominal, t));
            }
            return m;
        };
        run.t_start = nominal.t_start;
        run.t_end = nominal.t_end;
    }
    return run;
}

namespace {

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

double protocol_fidelity(ScanAxis axis, Protocol p, double pert,
                         const ScanSettings& st, int* resolution_out) {
    const ProtocolRun run = protocol_run(axis, p, pert, st);
    const int n = st.n_steps_override > 0
                      ? st.n_steps_override
                      : default_n_steps(run.h, run.t_start, run.t_end);
    if (resolution_out) *resolution_out = n;
    const Trajectory traj = evolve(run.h, StateVector{run.psi0},
                                   TimeGrid(run.t_start, run.t_end, n));
    return traj.populations.back()(run.target);
}

std::vector<ScanPoint> run_scan(ScanAxis axis, const std::vector<Protocol>& protocols,
                                const std::vector<double>& grid,
                                const ScanSettings& st) {
    const int np = static_cast<int>(protocols.size());
    const int total = static_cast<int>(grid.size()) * np;
    std::vector<ScanPoint> out(total);
    parallel_for(total, st.threads, [&](int i) {
        const int gi = i / np;
        const Protocol p = protocols[i % np];
        int res = 0;
        const double f = protocol_fidelity(axis, p, grid[gi], st, &res);
        out[i] = ScanPoint{grid[gi], protocol_name(p), f, res};
    });
    return out;
}

double stirap_min_T(double omega0, double delta, double delay_frac,
                    double threshold, int steps_override) {
    auto p3 = [&](double T) {
        const ThreeLevelScheme s = stirap_sin4(omega0, T, delay_frac * T, delta);
        const HamiltonianFn h = h0_fn(s);
        const int n = steps_override > 0 ? steps_override
                                         : default_n_steps(h, s.t_start, s.t_end);
        Vector psi0(3);
        psi0 << 1.0, 0.0, 0.0;
        const Trajectory traj =
            evolve(h, StateVector{psi0}, TimeGrid(s.t_start, s.t_end, n));
        return traj.populations.back()(2);
    };
    double lo = 0.26, hi = lo;
    while (p3(hi) < threshold) {
        lo = hi;
        hi *= 1.15;
        if (hi > 60.0) throw std::runtime_error("stirap_min_T: bracket failure");
    }
    for (int it = 0; it < 50 && hi - lo > 1e-6 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (p3(mid) >= threshold) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig1", "fig2a", "fig2b",
                                                 "fig4", "fig5a", "fig5b"};
    return ids;
}

namespace {

std::vector<double> linear_grid(double lo, double hi, double step) {
    const int count = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = lo + i * step;
    return g;
}

// Decimation stride keeping the sample count near the target (endpoints kept).
int plot_stride(int n_samples, int target) {
    return std::max(1, (n_samples - 1) / target);
}

FigureData figure_energies(int steps_override) {
    // Dimensionless sweep, w = 5, tau = 1.22; energies in units of b.
    const double omega = 5.0, tau = 1.22;
    const TwoLevelScheme s = allen_eberly(omega, 1.0, tau, 8.0 * tau);
    const HamiltonianFn h0 = h0_fn(s);
    const HamiltonianFn hs = shape_fn(s);
    const int n = steps_override > 0 ? steps_override
                                     : default_n_steps(hs, s.t_start, s.t_end);
    const TimeGrid grid(s.t_start, s.t_end, n);
    const StateVector psi0 = normalize(eigenstates_two_level(s, s.t_start).lower);
    const Trajectory bare = evolve(h0, psi0, grid);
    const Trajectory driven = evolve(hs, psi0, grid);
    const std::vector<double> avg_bare = average_energy(bare, h0);
    // Measured against the bare Hamiltonian for both dynamics, to compare
    // with the same adiabatic energy curves.
    const std::vector<double> avg_driven = average_energy(driven, h0);
    FigureData fig;
    fig.description = "instantaneous energies and average energy, dimensionless sweep w=5 tau=1.22";
    fig.n_steps_used = n;
    const int stride = plot_stride(grid.n_samples(), 500);
    for (int k = 0; k < grid.n_samples(); k += stride) {
        const double t = grid.sample(k);
        const double d = s.detuning(t);
        const double w = std::hypot(s.rabi(t), d);
        fig.rows.push_back({t, "eps_diabatic_plus", 0.5 * d});
        fig.rows.push_back({t, "eps_diabatic_minus", -0.5 * d});
        fig.rows.push_back({t, "eps_adiabatic_plus", 0.5 * w});
        fig.rows.push_back({t, "eps_adiabatic_minus", -0.5 * w});
        fig.rows.push_back({t, "eps_avg_h0", avg_bare[k]});
        fig.rows.push_back({t, "eps_avg_shape", avg_driven[k]});
    }
    return fig;
}

FigureData figure_scan(ScanAxis axis, int steps_override) {
    ScanSettings st = ScanSettings::defaults();
    st.n_steps_override = steps_override;
    const std::vector<Protocol> protocols = {
        Protocol::AdiabaticH0, Protocol::Shape, Protocol::RabiPi,
        Protocol::CompositeXyx};
    FigureData fig;
    if (axis == ScanAxis::RabiError) {
        const std::vector<double> grid = linear_grid(-0.2, 0.2, 0.01);
        // Two amplitude-error models for the driven sweep: error on the
        // bare drive only, and on the full laser chain.
        st.eta_h0_only = true;
        const auto rows_h0 = run_scan(axis, protocols, grid, st);
        st.eta_h0_only = false;
        const auto rows_all = run_scan(axis, {Protocol::Shape}, grid, st);
        for (size_t i = 0; i < grid.size(); ++i) {
            for (size_t j = 0; j < protocols.size(); ++j) {
                const auto& r = rows_h0[i * protocols.size() + j];
                fig.rows.push_back({r.perturbation, r.protocol, r.fidelity});
            }
            fig.rows.push_back(
                {rows_all[i].perturbation, "shape-aux-scaled", rows_all[i].fidelity});
        }
        fig.description = "terminal fidelity vs relative amplitude error";
        for (const auto& r : rows_h0) fig.n_steps_used = std::max(fig.n_steps_used, r.resolution);
    } else {
        const std::vector<double> grid =
            linear_grid(-2.0 * M_PI, 2.0 * M_PI, 2.0 * M_PI * 0.05);
        const auto rows = run_scan(axis, protocols, grid, st);
        for (const auto& r : rows) {
            fig.rows.push_back({r.perturbation, r.protocol, r.fidelity});
        }
        fig.description = "terminal fidelity vs detuning offset (rad/us)";
        for (const auto& r : rows) fig.n_steps_used = std::max(fig.n_steps_used, r.resolution);
    }
    return fig;
}

FigureData figure_pulses(int steps_override) {
    const ScanSettings st = ScanSettings::defaults();
    const ThreeLevelScheme s =
        stirap_sin4(st.s_omega0, st.s_T, st.s_delay_frac * st.s_T, st.s_delta);
    FigureData fig;
    fig.description = "pulse pair and auxiliary amplitude";
    const int n = steps_override > 0 ? steps_override : 600;
    fig.n_steps_used = n;
    for (int k = 0; k <= n; ++k) {
        const double t = s.t_start + (s.t_end - s.t_start) * k / n;
        const double wp = s.pump(t), ws = s.stokes(t);
        const double wa = (wp == 0.0 && ws == 0.0) ? 0.0 : omega_a_prime(s, t);
        fig.rows.push_back({t, "omega_p", wp});
        fig.rows.push_back({t, "omega_s", ws});
        fig.rows.push_back({t, "omega_a_prime", wa});
        fig.rows.push_back({t, "omega_a_prime_over_omega0", wa / st.s_omega0});
    }
    return fig;
}

FigureData figure_populations(bool with_aux, int steps_override) {
    const ScanSettings st = ScanSettings::defaults();
    const ThreeLevelScheme s =
        stirap_sin4(st.s_omega0, st.s_T, st.s_delay_frac * st.s_T, st.s_delta);
    const HamiltonianFn h = with_aux ? stirap_shape_fn(s, true) : h0_fn(s);
    const int n = steps_override > 0 ? steps_override
                                     : default_n_steps(h, s.t_start, s.t_end);
    const TimeGrid grid(s.t_start, s.t_end, n);
    Vector psi0(3);
    psi0 << 1.0, 0.0, 0.0;
    const Trajectory traj = evolve(h, StateVector{psi0}, grid);
    FigureData fig;
    fig.description = with_aux ? "populations with the auxiliary coupling"
                               : "populations under the bare pulse pair";
    fig.n_steps_used = n;
    const int stride = plot_stride(grid.n_samples(), 500);
    std::vector<int> samples;
    for (int k = 0; k < grid.n_samples(); k += stride) samples.push_back(k);
    if (samples.back() != grid.n_steps) samples.push_back(grid.n_steps);
    for (int k : samples) {
        const double t = grid.sample(k);
        fig.rows.push_back({t, "P1", traj.populations[k](0)});
        fig.rows.push_back({t, "P2", traj.populations[k](1)});
        fig.rows.push_back({t, "P3", traj.populations[k](2)});
    }
    return fig;
}

}  // namespace

FigureData reproduce_figure(const std::string& id, int steps_override) {
    if (id == "fig1") return figure_energies(steps_override);
    if (id == "fig2a") return figure_scan(ScanAxis::RabiError, steps_override);
    if (id == "fig2b") return figure_scan(ScanAxis::Detuning, steps_override);
    if (id == "fig4") return figure_pulses(steps_override);
    if (id == "fig5a") return figure_populations(false, steps_override);
    if (id == "fig5b") return figure_populations(true, steps_override);
    std::string msg = "unknown figure id '" + id + "'; valid ids:";
    for (const auto& f : figure_ids()) msg += " " + f;
    throw std::invalid_argument(msg);
}

}  // namespace ctd
