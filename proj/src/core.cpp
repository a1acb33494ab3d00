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

#include "ctdrive/core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ctd {

namespace {

const Complex kI(0.0, 1.0);

void require_hermitian(const Matrix& m, const char* where) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument(std::string(where) + ": matrix is not Hermitian");
    }
}

// 2x2 fast path: H = c*I + a.sigma, exp(-iH dt) = e^{-ic dt}(cos(|a|dt) I - i sin(|a|dt) a.sigma/|a|)
Vector step_exponential_2(const Matrix& h, double dt, const Vector& psi) {
    const double c = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double a1 = h(0, 1).real();
    const double a2 = -h(0, 1).imag();
    const double a3 = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double a = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
    const Complex phase = std::exp(-kI * c * dt);
    if (a == 0.0) return phase * psi;
    const double co = std::cos(a * dt);
    const double si = std::sin(a * dt) / a;
    Vector out(2);
    const Complex odiag(a1, -a2);
    out(0) = phase * ((co - kI * si * a3) * psi(0) - kI * si * odiag * psi(1));
    out(1) = phase * (-kI * si * std::conj(odiag) * psi(0) + (co + kI * si * a3) * psi(1));
    return out;
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

StateVector normalize(const Vector& v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("degenerate state");
    return StateVector{v / n};
}

TimeGrid::TimeGrid(double a, double b, int n) : t_start(a), t_end(b), n_steps(n) {
    if (!(b > a)) throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
    if (n < 2) throw std::invalid_argument("TimeGrid: n_steps must be at least 2");
}

EigenSystem eigensystem_hermitian(const Matrix& m) {
    require_hermitian(m, "eigensystem_hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigensystem_hermitian: decomposition failed");
    }
    EigenSystem sys{es.eigenvalues(), es.eigenvectors()};
    // Deterministic gauge: largest-magnitude entry real positive.
    for (Eigen::Index k = 0; k < sys.vectors.cols(); ++k) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < sys.vectors.rows(); ++i) {
            const double a = std::abs(sys.vectors(i, k));
            if (a > best + 1e-15) {
                best = a;
                imax = i;
            }
        }
        const Complex z = sys.vectors(imax, k);
        if (std::abs(z) > 0.0) sys.vectors.col(k) *= std::conj(z) / std::abs(z);
    }
    return sys;
}

Vector step_exponential(const Matrix& h, double dt, const Vector& psi) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_exponential: dt must be positive");
    require_hermitian(h, "step_exponential");
    if (h.rows() == 2) return step_exponential_2(h, dt, psi);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXcd phases =
        (-kI * dt * es.eigenvalues().cast<Complex>().array()).exp();
    return es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * psi));
}

namespace {

Matrix fetch_h(const HamiltonianFn& h_fn, double t) {
    Matrix h = h_fn(t);
    if (!h.allFinite()) {
        std::ostringstream os;
        os << "evolve: non-finite Hamiltonian entries at t=" << t;
        throw std::runtime_error(os.str());
    }
    return h;
}

}  // namespace

Trajectory evolve(const HamiltonianFn& h_fn, const StateVector& psi0,
                  const TimeGrid& grid, Method method) {
    if (std::abs(psi0.amplitudes.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("evolve: initial state is not normalized");
    }
    Trajectory traj{grid, {}, {}, 0.0};
    traj.states.reserve(grid.n_samples());
    traj.populations.reserve(grid.n_samples());
    Vector psi = psi0.amplitudes;
    const double dt = grid.dt();
    auto record = [&](const Vector& s) {
        traj.states.push_back(s);
        traj.populations.push_back(s.cwiseAbs2().real());
    };
    record(psi);
    if (method == Method::MidpointExponential) {
        for (int k = 0; k < grid.n_steps; ++k) {
            const double tm = grid.t_start + (k + 0.5) * dt;
            psi = step_exponential(fetch_h(h_fn, tm), dt, psi);
            record(psi);
        }
    } else {
        for (int k = 0; k < grid.n_steps; ++k) {
            const double t = grid.sample(k);
            const Matrix h1 = fetch_h(h_fn, t);
            const Matrix h2 = fetch_h(h_fn, t + 0.5 * dt);
            const Matrix h3 = fetch_h(h_fn, grid.sample(k + 1));
            const Vector k1 = -kI * (h1 * psi);
            const Vector k2 = -kI * (h2 * (psi + 0.5 * dt * k1));
            const Vector k3 = -kI * (h2 * (psi + 0.5 * dt * k2));
            const Vector k4 = -kI * (h3 * (psi + dt * k3));
            psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double drift = std::abs(psi.norm() - 1.0);
            traj.peak_norm_drift = std::max(traj.peak_norm_drift, drift);
            if (drift > 1e-10) psi /= psi.norm();
            record(psi);
        }
    }
    return traj;
}

double spectral_norm(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

int default_n_steps(const HamiltonianFn& h_fn, double t_start, double t_end) {
    const double span = t_end - t_start;
    if (!(span > 0.0)) throw std::invalid_argument("default_n_steps: empty window");
    double max_h = 0.0;
    const int probes = 512;
    for (int i = 0; i <= probes; ++i) {
        const double t = t_start + span * i / probes;
        max_h = std::max(max_h, spectral_norm(h_fn(t)));
    }
    const double needed = span * max_h / 0.01;
    return std::max(4000, static_cast<int>(std::ceil(needed)));
}

}  // namespace ctd
