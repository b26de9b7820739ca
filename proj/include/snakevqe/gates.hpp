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
#include <span>
#include <vector>

#include "snakevqe/pauli.hpp"
#include "snakevqe/statevector.hpp"

namespace snakevqe {

/**
 * Elementary gates used to compile Pauli exponentials.
 *
 * Rotations use half angles: Rx(phi) = exp(-i phi X / 2),
 * Rz(phi) = exp(-i phi Z / 2).
 */
struct Gate {
  enum class Kind { H, Rx, Rz, CNOT };

  Kind kind;
  std::size_t target;
  std::size_t control = 0;  // CNOT only
  double angle = 0.0;       // Rx / Rz only

  static Gate h(std::size_t q) { return {Kind::H, q}; }
  static Gate rx(std::size_t q, double phi) { return {Kind::Rx, q, 0, phi}; }
  static Gate rz(std::size_t q, double phi) { return {Kind::Rz, q, 0, phi}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {Kind::CNOT, target, control};
  }
};

StateVector apply_gate(StateVector state, const Gate& gate);
void apply_gate_inplace(StateVector& state, const Gate& gate);
StateVector apply_circuit(StateVector state, std::span<const Gate> gates);

/**
 * Gate sequence (in application order) equal to exp(-i theta P) up to a
 * global phase: basis change on every non-identity qubit (H for X,
 * Rx(pi/2) for Y), a CNOT ladder accumulating parity onto the last active
 * qubit, Rz(2 theta) there, then the ladder and basis change undone.
 * Throws for the identity word.
 */
std::vector<Gate> decompose_pauli_exponential(const PauliString& p, double theta);

}  // namespace snakevqe
