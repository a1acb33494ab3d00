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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ctdrive/adiabatic.hpp"
#include "ctdrive/core.hpp"
#include "ctdrive/counterdiabatic.hpp"
#include "ctdrive/schemes.hpp"

using namespace ctd;

namespace {

Matrix random_hermitian(int d, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
    }
    return 0.5 * (a + a.adjoint());
}

Vector ground2() {
    Vector v(2);
    v << 1.0, 0.0;
    return v;
}

double fidelity(const Vector& a, const Vector& b) { return std::norm(a.dot(b)); }

}  // namespace

TEST_CASE("normalize") {
    Vector v(2);
    v << 1.0, 0.0;
    CHECK((normalize(v).amplitudes - v).norm() == doctest::Approx(0.0).epsilon(1e-15));

    v << 1.0, 1.0;
    const Vector n = normalize(v).amplitudes;
    CHECK(std::abs(n(0).real() - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(n(1).real() - 1.0 / std::sqrt(2.0)) < 1e-15);

    v << Complex(0.0, 3.0), Complex(4.0, 0.0);
    const Vector m = normalize(v).amplitudes;
    CHECK(std::abs(m(0) - Complex(0.0, 0.6)) < 1e-15);
    CHECK(std::abs(m(1) - Complex(0.8, 0.0)) < 1e-15);
    CHECK(std::abs(m.norm() - 1.0) < 1e-12);

    v << 0.0, 0.0;
    CHECK_THROWS_WITH_AS(normalize(v), "degenerate state", std::invalid_argument);
}

TEST_CASE("eigensystem on pinned matrices") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = -1.0;
    d(1, 1) = 1.0;
    EigenSystem sys = eigensystem_hermitian(d);
    CHECK(sys.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sys.values(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(sys.vectors(0, 0) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(sys.vectors(1, 1) - Complex(1.0, 0.0)) < 1e-12);

    Matrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;  // 1/2 [[0, 2], [2, 0]]
    sys = eigensystem_hermitian(sx);
    CHECK(sys.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sys.values(1) == doctest::Approx(1.0).epsilon(1e-14));

    Matrix three(3, 3);
    three << 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0;  // Wp = Ws = 1, Delta = 0
    sys = eigensystem_hermitian(three);
    CHECK(sys.values(0) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::abs(sys.values(1)) < 1e-13);
    CHECK(sys.values(2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

    Matrix bad(2, 2);
    bad << 0.0, 1.0, 2.0, 0.0;
    CHECK_THROWS_AS(eigensystem_hermitian(bad), std::invalid_argument);
}

TEST_CASE("eigensystem reconstruction over random matrices") {
    std::mt19937 rng(12345);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const Matrix m = random_hermitian(d, rng);
            const EigenSystem sys = eigensystem_hermitian(m);
            const Matrix rebuilt = sys.vectors *
                                   sys.values.cast<Complex>().asDiagonal() *
                                   sys.vectors.adjoint();
            const double scale = std::max(1e-300, spectral_norm(m));
            CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-10 * scale);
            CHECK((sys.vectors.adjoint() * sys.vectors - Matrix::Identity(d, d))
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
            for (int k = 0; k < d; ++k) {
                CHECK((m * sys.vectors.col(k) - sys.values(k) * sys.vectors.col(k))
                          .norm() < 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("eigensystem gauge is deterministic") {
    std::mt19937 rng(7);
    const Matrix m = random_hermitian(3, rng);
    const EigenSystem a = eigensystem_hermitian(m);
    const EigenSystem b = eigensystem_hermitian(m);
    CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
    for (int k = 0; k < 3; ++k) {
        Eigen::Index imax;
        a.vectors.col(k).cwiseAbs().maxCoeff(&imax);
        CHECK(a.vectors(imax, k).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(a.vectors(imax, k).real() > 0.0);
    }
}

TEST_CASE("step_exponential rotations") {
    const double w0 = 2.0;
    Matrix h = Matrix::Zero(2, 2);
    CHECK((step_exponential(h, 0.3, ground2()) - ground2()).norm() < 1e-14);

    h << 0.0, 0.5 * w0, 0.5 * w0, 0.0;
    Vector out = step_exponential(h, M_PI / w0, ground2());
    CHECK(std::norm(out(1)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(out(1) - Complex(0.0, -1.0)) < 1e-12);  // (0, -i) up to phase

    out = step_exponential(h, 0.5 * M_PI / w0, ground2());
    CHECK(std::norm(out(0)) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::norm(out(1)) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(out.norm() - 1.0) < 1e-13);
}

TEST_CASE("evolve basics") {
    const HamiltonianFn zero = [](double) { return Matrix::Zero(2, 2); };
    const TimeGrid grid(0.0, 1.0, 16);
    Trajectory traj = evolve(zero, StateVector{ground2()}, grid);
    for (const auto& s : traj.states) CHECK((s - ground2()).norm() < 1e-14);

    const double w0 = 3.0;
    const HamiltonianFn flop = [w0](double) {
        Matrix h(2, 2);
        h << 0.0, 0.5 * w0, 0.5 * w0, 0.0;
        return h;
    };
    traj = evolve(flop, StateVector{ground2()}, TimeGrid(0.0, M_PI / w0, 100));
    CHECK(traj.populations.back()(1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(traj.populations.back()(0) < 1e-10);

    Vector bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(evolve(flop, StateVector{bad}, grid), std::invalid_argument);

    const HamiltonianFn nan_at_half = [](double t) {
        Matrix h = Matrix::Zero(2, 2);
        if (t > 0.5) h(0, 0) = std::nan("");
        return h;
    };
    CHECK_THROWS_WITH_AS(evolve(nan_at_half, StateVector{ground2()}, grid),
                         doctest::Contains("non-finite Hamiltonian entries at t="),
                         std::runtime_error);
}

TEST_CASE("driven sweep inverts the population") {
    const TwoLevelScheme s = allen_eberly(5.0, 1.0, 1.22, 8.0 * 1.22);
    const HamiltonianFn h = shape_fn(s);
    const int n = default_n_steps(h, s.t_start, s.t_end);
    const Trajectory traj =
        evolve(h, StateVector{ground2()}, TimeGrid(s.t_start, s.t_end, n));
    CHECK(traj.populations.back()(1) >= 0.9999);
    double worst = 0.0;
    for (const auto& st : traj.states) worst = std::max(worst, std::abs(st.norm() - 1.0));
    CHECK(worst < 1e-12);
}

TEST_CASE("doubling the resolution leaves terminal populations unchanged") {
    auto terminal = [](const HamiltonianFn& h, const Vector& psi0, double a, double b,
                       int n) {
        return evolve(h, StateVector{psi0}, TimeGrid(a, b, n)).populations.back();
    };
    {
        const TwoLevelScheme s = allen_eberly(10.0, 1.0, 1.0, 8.0);
        const HamiltonianFn h = h0_fn(s);
        const int n = default_n_steps(h, s.t_start, s.t_end);
        const auto p1 = terminal(h, ground2(), s.t_start, s.t_end, n);
        const auto p2 = terminal(h, ground2(), s.t_start, s.t_end, 2 * n);
        CHECK((p1 - p2).cwiseAbs().maxCoeff() < 1e-8);
    }
    {
        const TwoLevelScheme s = allen_eberly(5.0, 1.0, 1.22, 8.0 * 1.22);
        const HamiltonianFn h = shape_fn(s);
        const int n = default_n_steps(h, s.t_start, s.t_end);
        const auto p1 = terminal(h, ground2(), s.t_start, s.t_end, n);
        const auto p2 = terminal(h, ground2(), s.t_start, s.t_end, 2 * n);
        CHECK((p1 - p2).cwiseAbs().maxCoeff() < 1e-8);
    }
    {
        const ThreeLevelScheme s =
            stirap_sin4(2.0 * M_PI * 5.0, 0.26, 0.26 / 5.0, 2.0 * M_PI * 0.5);
        const HamiltonianFn h = stirap_shape_fn(s, true);
        Vector psi0(3);
        psi0 << 1.0, 0.0, 0.0;
        const int n = default_n_steps(h, s.t_start, s.t_end);
        const auto p1 = terminal(h, psi0, s.t_start, s.t_end, n);
        const auto p2 = terminal(h, psi0, s.t_start, s.t_end, 2 * n);
        CHECK((p1 - p2).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("rk4 cross-checks the exponential integrator") {
    auto check = [](const HamiltonianFn& h, const Vector& psi0, double a, double b) {
        const int n = default_n_steps(h, a, b);
        const Trajectory me = evolve(h, StateVector{psi0}, TimeGrid(a, b, n));
        const Trajectory rk = evolve(h, StateVector{psi0}, TimeGrid(a, b, n), Method::Rk4);
        CHECK(1.0 - fidelity(me.states.back(), rk.states.back()) < 1e-7);
    };
    const TwoLevelScheme s = allen_eberly(5.0, 1.0, 1.22, 8.0 * 1.22);
    check(h0_fn(s), ground2(), s.t_start, s.t_end);
    check(shape_fn(s), ground2(), s.t_start, s.t_end);
    const ThreeLevelScheme st =
        stirap_sin4(2.0 * M_PI * 5.0, 0.26, 0.26 / 5.0, 2.0 * M_PI * 0.5);
    Vector psi0(3);
    psi0 << 1.0, 0.0, 0.0;
    check(stirap_shape_fn(st, true), psi0, st.t_start, st.t_end);
}

TEST_CASE("time-mirrored negated evolution returns the start state") {
    const TwoLevelScheme s = allen_eberly(5.0, 1.0, 1.22, 8.0 * 1.22);
    const HamiltonianFn h = shape_fn(s);
    const double a = s.t_start, b = s.t_end;
    const int n = default_n_steps(h, a, b);
    const Trajectory fwd = evolve(h, StateVector{ground2()}, TimeGrid(a, b, n));
    const HamiltonianFn back = [h, a, b](double t) -> Matrix { return -h(a + b - t); };
    const Trajectory rev =
        evolve(back, StateVector{fwd.states.back()}, TimeGrid(a, b, n));
    CHECK((rev.states.back() - ground2()).norm() < 1e-8);
}

TEST_CASE("population rows are normalized") {
    const TwoLevelScheme s = allen_eberly(3.0, 1.0, 0.5, 4.0);
    const HamiltonianFn h = shape_fn(s);
    const Trajectory traj =
        evolve(h, StateVector{ground2()}, TimeGrid(s.t_start, s.t_end, 4000));
    for (const auto& p : traj.populations) {
        CHECK(p.minCoeff() >= 0.0);
        CHECK(p.maxCoeff() <= 1.0 + 1e-12);
        CHECK(std::abs(p.sum() - 1.0) < 1e-10);
    }
}
