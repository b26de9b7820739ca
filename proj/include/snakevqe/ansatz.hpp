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

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "snakevqe/hamiltonian.hpp"
#include "snakevqe/pauli.hpp"
#include "snakevqe/statevector.hpp"

namespace snakevqe {

/// exp(-i * theta[param_index] * scale * generator)
struct AnsatzGate {
  PauliString generator;
  std::size_t param_index;
  double scale = 1.0;
};

/**
 * Reference basis state plus an ordered list of parameterized Pauli
 * exponentials. Gates apply in list order, so an operator product written
 * U = U_2 U_1 is stored as {U_1, U_2}. Several gates may share a parameter
 * (commuting split of a non-unit generator such as a X_0 + b X_1).
 */
class Ansatz {
 public:
  Ansatz(std::string reference, std::vector<AnsatzGate> gates);

  std::size_t n_qubits() const { return reference_.size(); }
  std::size_t n_params() const { return n_params_; }
  const std::string& reference() const { return reference_; }
  const std::vector<AnsatzGate>& gates() const { return gates_; }

  Ansatz with_reference(std::string reference) const;

 private:
  std::string reference_;
  std::vector<AnsatzGate> gates_;
  std::size_t n_params_ = 0;
};

/// One of h2_ucc, lih_ucc, hehp_ucc, h2_nonconvex.
Ansatz builtin_ansatz(std::string_view name);
std::vector<std::string> builtin_ansatz_names();

/// {"n_qubits": n, "reference": "01", "gates": [{"pauli": "XY", "param": 0, "scale": 1.0}]}
Ansatz ansatz_from_json(const nlohmann::json& doc);
nlohmann::json ansatz_to_json(const Ansatz& ansatz);
Ansatz load_ansatz(const std::filesystem::path& path);

/// Builtin name, or a path to an ansatz JSON file.
Ansatz resolve_ansatz(const std::string& name_or_path);

StateVector prepare(const Ansatz& ansatz, std::span<const double> theta);

double energy_at(const Ansatz& ansatz, const Hamiltonian& h,
                 std::span<const double> theta);

/**
 * Analytic gradient by the parameter-shift rule. Each gate contributes
 * scale * [E(phi + pi/4) - E(phi - pi/4)] with phi its effective angle,
 * which is exact for unit Pauli generators.
 */
std::vector<double> gradient(const Ansatz& ansatz, const Hamiltonian& h,
                             std::span<const double> theta);

/// Central finite differences with step h_step.
std::vector<double> gradient_fd(const Ansatz& ansatz, const Hamiltonian& h,
                                std::span<const double> theta,
                                double h_step = 1e-5);

}  // namespace snakevqe
