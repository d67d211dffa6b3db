// Copyright 2026 The nmrvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "nmrvqe/ansatz.hpp"
#include "nmrvqe/circuit.hpp"
#include "nmrvqe/eigensolver.hpp"
#include "nmrvqe/error.hpp"
#include "nmrvqe/nmr.hpp"
#include "nmrvqe/optimizer.hpp"
#include "nmrvqe/pauli.hpp"
#include "nmrvqe/vqe.hpp"

namespace py = pybind11;
using namespace nmrvqe;

namespace {

PauliSum make_sum(int n_qubits, const std::vector<std::pair<double, std::string>>& terms) {
  PauliSum h(n_qubits);
  for (const auto& [coeff, label] : terms) h.add(coeff, label);
  return h;
}

AnsatzSpec ansatz_by_name(const std::string& name, int n_qubits, int layers) {
  if (name == "ab_fig2") return AnsatzSpec::ab();
  if (name == "ab2_fig4") return AnsatzSpec::ab2();
  if (name == "layered") return AnsatzSpec::layered(n_qubits, layers);
  fail(ErrorKind::kUsage, "unknown ansatz '" + name + "'");
}

OptimizerMethod method_by_name(const std::string& name) {
  if (name == "nelder-mead") return OptimizerMethod::kNelderMead;
  if (name == "param-shift-gd") return OptimizerMethod::kParamShiftGd;
  fail(ErrorKind::kUsage, "unknown optimizer '" + name + "'");
}

SpectrumLines lines_of(const std::string& system, std::vector<double> lines) {
  return {parse_system_kind(system), std::move(lines)};
}

py::list levels_of(const AnalyticSpectrum& s) {
  py::list out;
  for (const AnalyticLevel& l : s.levels) {
    py::dict d;
    d["label"] = l.label;
    d["energy"] = l.energy;
    d["state"] = l.state;
    out.append(d);
  }
  return out;
}

std::vector<std::vector<Complex>> dense_rows(const HermitianMatrix& m) {
  std::vector<std::vector<Complex>> rows(m.dimension());
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) rows[r].push_back(m(r, c));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_nmrvqe, m) {
  m.doc() = "NMR spin-system analysis and variational ground-state estimation";

  // Held for the interpreter lifetime, like the module itself.
  static PyObject* error_type =
      PyErr_NewException("nmrvqe._nmrvqe.NmrVqeError", PyExc_RuntimeError, nullptr);
  m.add_object("NmrVqeError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::gil_scoped_acquire gil;
      const py::handle type(error_type);
      py::object exc = type(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<PauliSum>(m, "PauliSum")
      .def(py::init(&make_sum), py::arg("n_qubits"),
           py::arg("terms") = std::vector<std::pair<double, std::string>>{})
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def("add", [](PauliSum& h, double c, const std::string& label) { h.add(c, label); })
      .def("terms",
           [](const PauliSum& h) {
             std::vector<std::pair<double, std::string>> out;
             for (const PauliTerm& t : h.terms()) out.emplace_back(t.coeff, t.string.label());
             return out;
           })
      .def("dense", [](const PauliSum& h) { return dense_rows(to_dense_matrix(h)); })
      .def("__len__", [](const PauliSum& h) { return h.terms().size(); });

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int, std::vector<Complex>>(), py::arg("n_qubits"), py::arg("amplitudes"))
      .def_property_readonly("n_qubits", &StateVector::n_qubits)
      .def("amplitudes",
           [](const StateVector& s) {
             return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
           })
      .def("norm_squared", &StateVector::norm_squared);

  m.def("basis_state", &init_basis_state, py::arg("n_qubits"), py::arg("index"));
  m.def("expectation", &expectation, py::arg("h"), py::arg("state"));
  m.def("fidelity", &fidelity);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def_property_readonly("parameter_count", &Circuit::free_parameter_count)
      .def("gates", [](const Circuit& c) {
        std::vector<std::string> out;
        for (const GateOp& g : c.ops()) out.emplace_back(to_string(g.kind));
        return out;
      });

  m.def(
      "build_ansatz",
      [](const std::string& name, int n_qubits, int layers) {
        return build_ansatz(ansatz_by_name(name, n_qubits, layers));
      },
      py::arg("name"), py::arg("n_qubits") = 2, py::arg("layers") = 1);
  m.def(
      "run_circuit",
      [](const Circuit& c, const std::vector<double>& theta) { return run_circuit(c, theta); },
      py::arg("circuit"), py::arg("theta"));
  m.def(
      "sample_expectation",
      [](const StateVector& s, const PauliSum& h, std::uint64_t shots, std::uint64_t seed) {
        const SampledEstimate e = sample_expectation(s, h, shots, seed);
        return std::make_pair(e.value, e.standard_error);
      },
      py::arg("state"), py::arg("h"), py::arg("shots"), py::arg("seed"));

  m.def("ground_energy", &ground_energy, py::arg("h"));
  m.def(
      "eigenvalues",
      [](const PauliSum& h) { return eigensystem(to_dense_matrix(h)).values; }, py::arg("h"));

  m.def(
      "extract_params",
      [](const std::string& system, std::vector<double> lines, double j_tolerance) {
        const SpectrumLines s = lines_of(system, std::move(lines));
        const SpinSystemParams p = s.kind == SystemKind::kAB
                                       ? extract_ab_params(s, {j_tolerance})
                                       : extract_ab2_params(s);
        py::dict d;
        d["system"] = std::string(to_string(p.kind));
        d["nu_a"] = p.nu_a;
        d["nu_b"] = p.nu_b;
        d["j_ab"] = p.j_ab;
        if (p.c_value) d["c_value"] = *p.c_value;
        if (p.theta_mix) d["theta_mix"] = *p.theta_mix;
        if (p.c_plus) d["c_plus"] = *p.c_plus;
        if (p.c_minus) d["c_minus"] = *p.c_minus;
        if (p.theta_plus) d["theta_plus"] = *p.theta_plus;
        if (p.theta_minus) d["theta_minus"] = *p.theta_minus;
        return d;
      },
      py::arg("system"), py::arg("lines"), py::arg("j_tolerance") = 0.02);
  m.def(
      "build_hamiltonian",
      [](const std::string& system, double nu_a, double nu_b, double j) {
        return parse_system_kind(system) == SystemKind::kAB
                   ? build_ab_hamiltonian(make_ab_params(nu_a, nu_b, j))
                   : build_ab2_hamiltonian(make_ab2_params(nu_a, nu_b, j));
      },
      py::arg("system"), py::arg("nu_a"), py::arg("nu_b"), py::arg("j"));
  m.def(
      "analytic_spectrum",
      [](const std::string& system, double nu_a, double nu_b, double j) {
        return parse_system_kind(system) == SystemKind::kAB
                   ? levels_of(ab_analytic_spectrum(make_ab_params(nu_a, nu_b, j)))
                   : levels_of(ab2_analytic_spectrum(make_ab2_params(nu_a, nu_b, j)));
      },
      py::arg("system"), py::arg("nu_a"), py::arg("nu_b"), py::arg("j"));
  m.def(
      "ab_forward_lines",
      [](double nu_a, double nu_b, double j) {
        return ab_forward_lines(make_ab_params(nu_a, nu_b, j)).frequencies;
      },
      py::arg("nu_a"), py::arg("nu_b"), py::arg("j"));

  m.def(
      "vqe",
      [](const PauliSum& h, const std::string& ansatz, int layers, const std::string& optimizer,
         int max_iterations, double tolerance, double step_size, std::uint64_t shots,
         std::uint64_t seed) {
        OptimizerOptions opts;
        opts.method = method_by_name(optimizer);
        opts.max_iterations = max_iterations;
        opts.tolerance = tolerance;
        opts.step_size = step_size;
        Measurement meas = ExactMeasurement{};
        if (shots > 0) meas = ShotMeasurement{shots, seed};
        const VqeResult r = [&] {
          py::gil_scoped_release release;
          return vqe_minimize(h, ansatz_by_name(ansatz, h.n_qubits(), layers), opts, meas);
        }();
        py::list trace;
        for (const TraceEntry& e : r.trace) {
          trace.append(py::make_tuple(e.iteration, e.evaluations, e.best_objective));
        }
        py::dict d;
        d["ground_energy"] = r.ground_energy;
        d["oracle_energy"] = r.oracle_energy;
        d["gap"] = r.absolute_gap;
        d["theta"] = r.optimal_parameters;
        d["iterations"] = r.trace.size();
        d["evaluations"] = r.evaluations;
        d["converged"] = r.converged;
        d["trace"] = trace;
        return d;
      },
      py::arg("h"), py::arg("ansatz") = "layered", py::arg("layers") = 1,
      py::arg("optimizer") = "nelder-mead", py::arg("max_iterations") = 5000,
      py::arg("tolerance") = 1e-10, py::arg("step_size") = 0.01, py::arg("shots") = 0,
      py::arg("seed") = 0);
}
