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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctdrive/adiabatic.hpp"
#include "ctdrive/config.hpp"
#include "ctdrive/core.hpp"
#include "ctdrive/counterdiabatic.hpp"
#include "ctdrive/experiments.hpp"
#include "ctdrive/schemes.hpp"

namespace py = pybind11;
using namespace ctd;

PYBIND11_MODULE(_ctdrive, m) {
    m.doc() = "counterdiabatic driving for two- and three-level atoms";

    py::class_<TwoLevelScheme>(m, "TwoLevelScheme")
        .def_readonly("t_start", &TwoLevelScheme::t_start)
        .def_readonly("t_end", &TwoLevelScheme::t_end)
        .def_readonly("coupling_phase", &TwoLevelScheme::coupling_phase)
        .def("rabi", [](const TwoLevelScheme& s, double t) { return s.rabi(t); })
        .def("detuning", [](const TwoLevelScheme& s, double t) { return s.detuning(t); });

    py::class_<ThreeLevelScheme>(m, "ThreeLevelScheme")
        .def_readonly("t_start", &ThreeLevelScheme::t_start)
        .def_readonly("t_end", &ThreeLevelScheme::t_end)
        .def_readonly("delta", &ThreeLevelScheme::delta)
        .def("pump", [](const ThreeLevelScheme& s, double t) { return s.pump(t); })
        .def("stokes", [](const ThreeLevelScheme& s, double t) { return s.stokes(t); });

    m.def("allen_eberly", &allen_eberly, py::arg("omega0"), py::arg("beta"),
          py::arg("t0"), py::arg("window_halfwidth"));
    m.def("landau_zener", &landau_zener, py::arg("omega0"), py::arg("sweep_rate"),
          py::arg("t_start"), py::arg("t_end"));
    m.def("square_pulse", &square_pulse, py::arg("omega0"), py::arg("delta"),
          py::arg("duration"), py::arg("coupling_phase") = 0.0);
    m.def("stirap_sin4", &stirap_sin4, py::arg("omega0"), py::arg("T"),
          py::arg("tau_d"), py::arg("delta"));

    m.def("h0_two_level", &h0_two_level);
    m.def("h0_three_level", &h0_three_level);
    m.def("h1_two_level", &h1_two_level);
    m.def("h1_three_level_full", &h1_three_level_full);
    m.def("h1_three_level_simplified", &h1_three_level_simplified);
    m.def("omega_a", &omega_a);
    m.def("omega_a_prime", &omega_a_prime);
    m.def("adiabaticity_ratio", &adiabaticity_ratio);
    m.def("cd_generic", &cd_generic, py::arg("h_fn"), py::arg("t"), py::arg("h"),
          py::arg("gauge_shuffle_seed") = 0);

    m.def("normalize", [](const Vector& v) { return normalize(v).amplitudes; });
    m.def("eigensystem_hermitian", [](const Matrix& mat) {
        const EigenSystem sys = eigensystem_hermitian(mat);
        return py::make_tuple(sys.values, sys.vectors);
    });
    m.def("step_exponential", &step_exponential);
    m.def(
        "evolve",
        [](const HamiltonianFn& h, const Vector& psi0, double t_start, double t_end,
           int n_steps, const std::string& method) {
            const Method meth = method == "rk4" ? Method::Rk4 : Method::MidpointExponential;
            const Trajectory traj = evolve(h, StateVector{psi0},
                                           TimeGrid(t_start, t_end, n_steps), meth);
            std::vector<double> times(traj.grid.n_samples());
            for (int k = 0; k < traj.grid.n_samples(); ++k) times[k] = traj.grid.sample(k);
            py::dict out;
            out["times"] = times;
            out["states"] = traj.states;
            out["populations"] = traj.populations;
            return out;
        },
        py::arg("h_fn"), py::arg("psi0"), py::arg("t_start"), py::arg("t_end"),
        py::arg("n_steps"), py::arg("method") = "midpoint-exponential");
    m.def("default_n_steps", &default_n_steps);

    m.def("p1_allen_eberly_analytic", &p1_allen_eberly_analytic);
    m.def("p1_square_pulse", &p1_square_pulse);
    m.def("minimal_tau", [](double omega) {
        const MinimalTau mt = minimal_tau(omega);
        return py::make_tuple(mt.tau_exact, mt.tau_formula);
    });
    m.def("max_abs_omega_a", &max_abs_omega_a, py::arg("scheme"),
          py::arg("coarse_samples") = 20001);
    m.def("stirap_min_T", &stirap_min_T, py::arg("omega0"), py::arg("delta"),
          py::arg("delay_frac"), py::arg("threshold") = 0.999,
          py::arg("steps_override") = 0);

    m.def(
        "scan",
        [](const std::string& axis, const std::vector<std::string>& protocols,
           const std::vector<double>& grid, bool eta_h0_only, int steps, int threads) {
            ScanSettings st = ScanSettings::defaults();
            st.eta_h0_only = eta_h0_only;
            st.n_steps_override = steps;
            st.threads = threads;
            std::vector<Protocol> ps;
            ps.reserve(protocols.size());
            for (const auto& name : protocols) ps.push_back(protocol_from_name(name));
            const ScanAxis ax = axis == "delta" ? ScanAxis::Detuning : ScanAxis::RabiError;
            std::vector<py::tuple> rows;
            for (const auto& r : run_scan(ax, ps, grid, st)) {
                rows.push_back(py::make_tuple(r.perturbation, r.protocol, r.fidelity,
                                              r.resolution));
            }
            return rows;
        },
        py::arg("axis"), py::arg("protocols"), py::arg("grid"),
        py::arg("eta_h0_only") = false, py::arg("steps") = 0, py::arg("threads") = 0);

    m.def("reproduce_figure", [](const std::string& id, int steps) {
        const FigureData fig = reproduce_figure(id, steps);
        std::vector<py::tuple> rows;
        rows.reserve(fig.rows.size());
        for (const auto& r : fig.rows) rows.push_back(py::make_tuple(r.x, r.series, r.value));
        return rows;
    }, py::arg("id"), py::arg("steps") = 0);
    m.def("figure_ids", [] { return figure_ids(); });
    m.def("protocol_names", [] { return protocol_names(); });
}
