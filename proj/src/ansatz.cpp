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

#include "snakevqe/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace snakevqe {

using nlohmann::json;

Ansatz::Ansatz(std::string reference, std::vector<AnsatzGate> gates)
    : reference_(std::move(reference)), gates_(std::move(gates)) {
  if (reference_.empty()) throw InputError("ansatz reference state is empty");
  for (char b : reference_) {
    if (b != '0' && b != '1') {
      throw InputError("reference '" + reference_ + "' may only contain 0 and 1");
    }
  }
  if (gates_.empty()) throw InputError("ansatz has no gates");
  for (const auto& g : gates_) {
    if (g.generator.n_qubits() != reference_.size()) {
      throw InputError("generator '" + g.generator.word() +
                       "' does not match the reference width");
    }
    if (g.generator.is_identity()) {
      throw InputError("ansatz generator may not be the identity word");
    }
    if (g.scale == 0.0 || !std::isfinite(g.scale)) {
      throw InputError("ansatz gate scale must be finite and non-zero");
    }
    n_params_ = std::max(n_params_, g.param_index + 1);
  }
  std::vector<bool> used(n_params_, false);
  for (const auto& g : gates_) used[g.param_index] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw InputError("every parameter index must be used by at least one gate");
  }
}

Ansatz Ansatz::with_reference(std::string reference) const {
  if (reference.size() != reference_.size()) {
    throw InputError("reference override '" + reference + "' has wrong width");
  }
  return Ansatz(std::move(reference), gates_);
}

Ansatz builtin_ansatz(std::string_view name) {
  if (name == "h2_ucc") {
    return Ansatz("01", {{PauliString("XY"), 0, 1.0}});
  }
  if (name == "lih_ucc") {
    return Ansatz("111", {{PauliString("XYI"), 0, 1.0}, {PauliString("XIY"), 1, 1.0}});
  }
  if (name == "hehp_ucc") {
    // exp(-i t3 X0X1X2Y3) exp(-i t2 X1Y3) exp(-i t1 X0Y2) |0011>
    return Ansatz("0011", {{PauliString("XIYI"), 0, 1.0},
                           {PauliString("IXIY"), 1, 1.0},
                           {PauliString("XXXY"), 2, 1.0}});
  }
  if (name == "h2_nonconvex") {
    // exp(-i t2 (2 X0 + 1.5 X1)) exp(-i t1 X0Y1) |01>; X0 and X1 commute.
    return Ansatz("01", {{PauliString("XY"), 0, 1.0},
                         {PauliString("XI"), 1, 2.0},
                         {PauliString("IX"), 1, 1.5}});
  }
  throw InputError("unknown ansatz '" + std::string(name) + "'");
}

std::vector<std::string> builtin_ansatz_names() {
  return {"h2_ucc", "lih_ucc", "hehp_ucc", "h2_nonconvex"};
}

Ansatz ansatz_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("reference") || !doc.contains("gates")) {
    throw InputError("ansatz JSON needs \"reference\" and \"gates\"");
  }
  if (!doc["reference"].is_string()) throw InputError("\"reference\" must be a string");
  const auto reference = doc["reference"].get<std::string>();
  if (doc.contains("n_qubits")) {
    const auto& nq = doc["n_qubits"];
    if (!nq.is_number_integer() || nq.get<long long>() != static_cast<long long>(reference.size())) {
      throw InputError("\"n_qubits\" does not match the reference width");
    }
  }
  if (!doc["gates"].is_array()) throw InputError("\"gates\" must be an array");
  std::vector<AnsatzGate> gates;
  for (const auto& g : doc["gates"]) {
    if (!g.is_object() || !g.contains("pauli") || !g.contains("param")) {
      throw InputError("ansatz gate needs \"pauli\" and \"param\"");
    }
    if (!g["pauli"].is_string()) throw InputError("\"pauli\" must be a string");
    if (!g["param"].is_number_integer() || g["param"].get<long long>() < 0) {
      throw InputError("\"param\" must be a non-negative integer");
    }
    double scale = 1.0;
    if (g.contains("scale")) {
      if (!g["scale"].is_number()) throw InputError("\"scale\" must be a number");
      scale = g["scale"].get<double>();
    }
    gates.push_back({PauliString::parse(g["pauli"].get<std::string>(), reference.size()),
                     static_cast<std::size_t>(g["param"].get<long long>()), scale});
  }
  return Ansatz(reference, std::move(gates));
}

json ansatz_to_json(const Ansatz& ansatz) {
  json gates = json::array();
  for (const auto& g : ansatz.gates()) {
    gates.push_back({{"pauli", g.generator.word()},
                     {"param", g.param_index},
                     {"scale", g.scale}});
  }
  return {{"n_qubits", ansatz.n_qubits()},
          {"reference", ansatz.reference()},
          {"gates", std::move(gates)}};
}

Ansatz load_ansatz(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ansatz file '" + path.string() + "'");
  try {
    return ansatz_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Ansatz resolve_ansatz(const std::string& name_or_path) {
  const auto names = builtin_ansatz_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin_ansatz(name_or_path);
  }
  if (name_or_path.find('.') == std::string::npos &&
      name_or_path.find('/') == std::string::npos) {
    throw InputError("unknown ansatz '" + name_or_path + "'");
  }
  return load_ansatz(name_or_path);
}

namespace {

void check_theta(const Ansatz& ansatz, std::span<const double> theta) {
  if (theta.size() != ansatz.n_params()) {
    throw std::invalid_argument("ansatz expects " + std::to_string(ansatz.n_params()) +
                                " parameters, got " + std::to_string(theta.size()));
  }
}

void check_hamiltonian(const Ansatz& ansatz, const Hamiltonian& h) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw std::invalid_argument("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                                " qubits, ansatz on " + std::to_string(ansatz.n_qubits()));
  }
}

// State with gate `shifted_gate` rotated by an extra `delta` of effective angle.
StateVector prepare_shifted(const Ansatz& ansatz, std::span<const double> theta,
                            std::size_t shifted_gate, double delta) {
  StateVector s = basis_state(ansatz.reference());
  const auto& gates = ansatz.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    double phi = gates[g].scale * theta[gates[g].param_index];
    if (g == shifted_gate) phi += delta;
    apply_pauli_exponential_inplace(s, gates[g].generator, phi);
  }
  return s;
}

}  // namespace

StateVector prepare(const Ansatz& ansatz, std::span<const double> theta) {
  check_theta(ansatz, theta);
  return prepare_shifted(ansatz, theta, ansatz.gates().size(), 0.0);
}

double energy_at(const Ansatz& ansatz, const Hamiltonian& h,
                 std::span<const double> theta) {
  check_hamiltonian(ansatz, h);
  return energy(prepare(ansatz, theta), h);
}

std::vector<double> gradient(const Ansatz& ansatz, const Hamiltonian& h,
                             std::span<const double> theta) {
  check_theta(ansatz, theta);
  check_hamiltonian(ansatz, h);
  constexpr double shift = std::numbers::pi / 4.0;
  std::vector<double> grad(ansatz.n_params(), 0.0);
  const auto& gates = ansatz.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const double plus = energy(prepare_shifted(ansatz, theta, g, shift), h);
    const double minus = energy(prepare_shifted(ansatz, theta, g, -shift), h);
    grad[gates[g].param_index] += gates[g].scale * (plus - minus);
  }
  return grad;
}

std::vector<double> gradient_fd(const Ansatz& ansatz, const Hamiltonian& h,
                                std::span<const double> theta, double h_step) {
  check_theta(ansatz, theta);
  check_hamiltonian(ansatz, h);
  if (!(h_step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> point(theta.begin(), theta.end());
  std::vector<double> grad(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    const double saved = point[j];
    point[j] = saved + h_step;
    const double plus = energy_at(ansatz, h, point);
    point[j] = saved - h_step;
    const double minus = energy_at(ansatz, h, point);
    point[j] = saved;
    grad[j] = (plus - minus) / (2.0 * h_step);
  }
  return grad;
}

}  // namespace snakevqe
