// Copyright 2026 The snakevqe Authors
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


#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cli.hpp"
#include "snakevqe/ansatz.hpp"
#include "snakevqe/hamiltonian.hpp"
#include "snakevqe/objective.hpp"
#include "snakevqe/oracle.hpp"
#include "snakevqe/snake.hpp"

namespace py = pybind11;
using namespace snakevqe;

namespace {

std::vector<PauliTerm> to_terms(const std::vector<std::pair<double, std::string>>& terms) {
  std::vector<PauliTerm> out;
  out.reserve(terms.size());
  for (const auto& [coeff, word] : terms) out.push_back({coeff, PauliString(word)});
  return out;
}

std::vector<std::pair<double, std::string>> from_terms(const Hamiltonian& h) {
  std::vector<std::pair<double, std::string>> out;
  for (const auto& t : h.terms()) out.emplace_back(t.coeff, t.pauli.word());
  return out;
}

std::vector<double> member_values(const RunReport& r) {
  std::vector<double> v;
  for (const auto& m : r.members) v.push_back(m.value);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collective VQE with the snake optimizer";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NonFiniteError>(m, "NonFiniteError", PyExc_FloatingPointError);

  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def(py::init([](std::size_t n, const std::vector<std::pair<double, std::string>>& terms) {
             return Hamiltonian(n, to_terms(terms));
           }),
           py::arg("n_qubits"), py::arg("terms"))
      .def_property_readonly("n_qubits", &Hamiltonian::n_qubits)
      .def_property_readonly("terms", &from_terms)
      .def("coeff", [](const Hamiltonian& h, const std::string& w) { return h.coeff(w); });

  py::class_<HamiltonianFamily>(m, "HamiltonianFamily")
      .def(py::init([](std::string name, const std::vector<std::pair<double, Hamiltonian>>& pts) {
             std::vector<FamilyPoint> points;
             for (const auto& [lambda, h] : pts) points.push_back({lambda, h});
             return HamiltonianFamily(std::move(name), std::move(points));
           }),
           py::arg("parameter_name"), py::arg("points"))
      .def("__len__", &HamiltonianFamily::size)
      .def_property_readonly("n_qubits", &HamiltonianFamily::n_qubits)
      .def_property_readonly("parameter_name", &HamiltonianFamily::parameter_name)
      .def_property_readonly("lambdas", &HamiltonianFamily::lambdas)
      .def("hamiltonian", [](const HamiltonianFamily& f, std::size_t i) {
        return f.points().at(i).hamiltonian;
      });

  m.def("load_family", &load_family, py::arg("path"));
  m.def("save_family", &save_family, py::arg("family"), py::arg("path"));
  m.def("synth_h2_family", &synth_h2_family, py::arg("points") = 54,
        py::arg("lambda_min") = 0.25, py::arg("lambda_max") = 2.85);

  py::class_<Ansatz>(m, "Ansatz")
      .def_property_readonly("n_qubits", &Ansatz::n_qubits)
      .def_property_readonly("n_params", &Ansatz::n_params)
      .def_property_readonly("reference", &Ansatz::reference)
      .def("with_reference", &Ansatz::with_reference);
  m.def("builtin_ansatz", [](const std::string& name) { return builtin_ansatz(name); });
  m.def("builtin_ansatz_names", &builtin_ansatz_names);
  m.def("resolve_ansatz", &resolve_ansatz, py::arg("name_or_path"));

  m.def("energy", [](const Ansatz& a, const Hamiltonian& h, const std::vector<double>& theta) {
    return energy_at(a, h, theta);
  });
  m.def("gradient", [](const Ansatz& a, const Hamiltonian& h, const std::vector<double>& theta) {
    return gradient(a, h, theta);
  });
  m.def("gradient_fd",
        [](const Ansatz& a, const Hamiltonian& h, const std::vector<double>& theta, double step) {
          return gradient_fd(a, h, theta, step);
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("theta"), py::arg("h_step") = 1e-5);
  m.def("ground_energy", &ground_energy);
  m.def("eigenvalues", &eigenvalues);
  m.def("grid_scan_min", [](const Ansatz& a, const Hamiltonian& h, std::size_t res) {
    const auto p = grid_scan_min(a, h, res);
    return std::make_tuple(p.theta, p.energy);
  });

  py::class_<ObjectiveFamily>(m, "ObjectiveFamily")
      .def("__len__", &ObjectiveFamily::size)
      .def_property_readonly("dim", &ObjectiveFamily::dim)
      .def_property_readonly("labels", &ObjectiveFamily::labels)
      .def_property_readonly("label_name", &ObjectiveFamily::label_name)
      .def("value", [](const ObjectiveFamily& f, std::size_t i, const std::vector<double>& t) {
        return f.value(i, t);
      })
      .def("gradient", [](const ObjectiveFamily& f, std::size_t i, const std::vector<double>& t) {
        return f.gradient(i, t);
      });
  py::class_<VQEFamily, ObjectiveFamily>(m, "VQEFamily")
      .def(py::init<HamiltonianFamily, Ansatz>(), py::arg("family"), py::arg("ansatz"));
  py::class_<STFamily, ObjectiveFamily>(m, "STFamily")
      .def(py::init<std::vector<double>>(), py::arg("t"))
      .def_static("uniform", &STFamily::uniform, py::arg("points") = 61,
                  py::arg("t_min") = 0.0, py::arg("t_max") = 6.0);
  py::class_<QuadraticFamily, ObjectiveFamily>(m, "QuadraticFamily")
      .def(py::init<Eigen::MatrixXd>(), py::arg("centres"));

  m.def("st_minima", [](double t) {
    const auto s = st_minima(t);
    return std::make_tuple(s.x_global, s.x_local, s.x_barrier);
  });
  m.def("st_basin", [](double x, double t) { return std::string(to_string(st_basin(x, t))); });

  py::class_<SnakeConfig>(m, "SnakeConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &SnakeConfig::alpha)
      .def_readwrite("beta", &SnakeConfig::beta)
      .def_readwrite("eta", &SnakeConfig::eta)
      .def_readwrite("gamma", &SnakeConfig::gamma)
      .def_readwrite("max_iters", &SnakeConfig::max_iters)
      .def_readwrite("grad_tol", &SnakeConfig::grad_tol)
      .def_property(
          "boundary", [](const SnakeConfig& c) { return std::string(to_string(c.boundary)); },
          [](SnakeConfig& c, const std::string& b) { c.boundary = parse_boundary(b); })
      .def_readwrite("seed", &SnakeConfig::seed)
      .def_readwrite("snapshot_stride", &SnakeConfig::snapshot_stride)
      .def("validate", &SnakeConfig::validate);
  py::class_<GdConfig>(m, "GdConfig")
      .def(py::init<>())
      .def_readwrite("eta", &GdConfig::eta)
      .def_readwrite("max_iters", &GdConfig::max_iters)
      .def_readwrite("grad_tol", &GdConfig::grad_tol)
      .def_readwrite("snapshot_stride", &GdConfig::snapshot_stride);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("optimizer", &RunReport::optimizer)
      .def_readonly("iterations", &RunReport::iterations)
      .def_readonly("converged", &RunReport::converged)
      .def_readonly("theta", &RunReport::theta)
      .def_readonly("equilibrium_residuals", &RunReport::equilibrium_residuals)
      .def_property_readonly("values", &member_values)
      .def_property_readonly("max_grad_norm", &RunReport::max_grad_norm)
      .def_property_readonly("trajectory", [](const RunReport& r) {
        py::list out;
        for (const auto& s : r.trajectory) out.append(py::make_tuple(s.iteration, s.theta));
        return out;
      });

  m.def("build_A", [](double alpha, double beta, std::size_t M, const std::string& boundary) {
    return build_A(alpha, beta, M, parse_boundary(boundary));
  }, py::arg("alpha"), py::arg("beta"), py::arg("M"), py::arg("boundary") = "periodic");
  m.def("random_init", &random_init, py::arg("M"), py::arg("K"), py::arg("lo"), py::arg("hi"),
        py::arg("seed"));
  m.def("snake_run",
        py::overload_cast<const ObjectiveFamily&, const SnakeConfig&, const Theta&>(&snake_run),
        py::arg("family"), py::arg("config"), py::arg("init"));
  m.def("gd_run", &gd_run, py::arg("family"), py::arg("config"), py::arg("init"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
