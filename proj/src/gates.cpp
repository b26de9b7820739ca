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

#include "snakevqe/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace snakevqe {

namespace {

std::size_t bit_of(std::size_t n_qubits, std::size_t q) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

// Apply the 2x2 matrix [[m00, m01], [m10, m11]] to qubit q.
void apply_single(StateVector& s, std::size_t q, Complex m00, Complex m01,
                  Complex m10, Complex m11) {
  const std::size_t b = bit_of(s.n_qubits(), q);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i & b) continue;
    const Complex a0 = s[i];
    const Complex a1 = s[i | b];
    s[i] = m00 * a0 + m01 * a1;
    s[i | b] = m10 * a0 + m11 * a1;
  }
}

}  // namespace

void apply_gate_inplace(StateVector& state, const Gate& gate) {
  const std::size_t n = state.n_qubits();
  if (gate.target >= n || (gate.kind == Gate::Kind::CNOT && gate.control >= n)) {
    throw std::out_of_range("gate qubit index out of range for " +
                            std::to_string(n) + " qubits");
  }
  switch (gate.kind) {
    case Gate::Kind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      apply_single(state, gate.target, r, r, r, -r);
      break;
    }
    case Gate::Kind::Rx: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      apply_single(state, gate.target, c, Complex(0, -s), Complex(0, -s), c);
      break;
    }
    case Gate::Kind::Rz: {
      const Complex e(std::cos(gate.angle / 2.0), -std::sin(gate.angle / 2.0));
      apply_single(state, gate.target, e, 0.0, 0.0, std::conj(e));
      break;
    }
    case Gate::Kind::CNOT: {
      if (gate.control == gate.target) {
        throw std::invalid_argument("CNOT control and target coincide");
      }
      const std::size_t cb = bit_of(n, gate.control);
      const std::size_t tb = bit_of(n, gate.target);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(state[i], state[i | tb]);
      }
      break;
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  apply_gate_inplace(state, gate);
  return state;
}

StateVector apply_circuit(StateVector state, std::span<const Gate> gates) {
  for (const auto& g : gates) apply_gate_inplace(state, g);
  return state;
}

std::vector<Gate> decompose_pauli_exponential(const PauliString& p, double theta) {
  std::vector<std::size_t> active;
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    if (p[q] != 'I') active.push_back(q);
  }
  if (active.empty()) {
    throw std::invalid_argument("identity word has no circuit decomposition");
  }
  const double half_pi = std::numbers::pi / 2.0;

  std::vector<Gate> basis_in;
  std::vector<Gate> basis_out;
  for (std::size_t q : active) {
    if (p[q] == 'X') {
      basis_in.push_back(Gate::h(q));
      basis_out.push_back(Gate::h(q));
    } else if (p[q] == 'Y') {
      // Rx(-pi/2) Z Rx(pi/2) = Y
      basis_in.push_back(Gate::rx(q, half_pi));
      basis_out.push_back(Gate::rx(q, -half_pi));
    }
  }

  std::vector<Gate> out = basis_in;
  for (std::size_t k = 0; k + 1 < active.size(); ++k) {
    out.push_back(Gate::cnot(active[k], active[k + 1]));
  }
  out.push_back(Gate::rz(active.back(), 2.0 * theta));
  for (std::size_t k = active.size() - 1; k > 0; --k) {
    out.push_back(Gate::cnot(active[k - 1], active[k]));
  }
  out.insert(out.end(), basis_out.begin(), basis_out.end());
  return out;
}

}  // namespace snakevqe
