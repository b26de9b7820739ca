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

#include "snakevqe/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace snakevqe {

namespace {

void check_width(std::size_t n_qubits, std::size_t pauli_qubits) {
  if (n_qubits != pauli_qubits) {
    throw std::invalid_argument("Pauli word acts on " +
                                std::to_string(pauli_qubits) +
                                " qubits but the state has " +
                                std::to_string(n_qubits));
  }
}

// i^{#Y}: the global phase factor picked up from Y letters.
Complex y_phase(int y_count) {
  switch (y_count & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// Sign (-1)^{popcount(i & mask)} applied on the source basis index.
double parity_sign(std::size_t i, std::uint64_t mask) {
  return (std::popcount(static_cast<std::uint64_t>(i) & mask) & 1) ? -1.0 : 1.0;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_() {
  if (n_qubits == 0 || n_qubits > kMaxSimQubits) {
    throw std::invalid_argument("state needs 1.." +
                                std::to_string(kMaxSimQubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : StateVector(n_qubits) {
  if (amplitudes.size() != amps_.size()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  amps_ = std::move(amplitudes);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector basis_state(std::string_view bits) {
  if (bits.empty()) throw InputError("empty bitstring");
  StateVector s(bits.size());
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') {
      throw InputError("bitstring '" + std::string(bits) +
                       "' may only contain 0 and 1");
    }
    index = (index << 1) | static_cast<std::size_t>(b == '1');
  }
  s[index] = 1.0;
  return s;
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  check_width(state.n_qubits(), p.n_qubits());
  StateVector out(state.n_qubits());
  const Complex phase = y_phase(p.y_count());
  const auto flip = static_cast<std::size_t>(p.flip_mask());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out[i ^ flip] = phase * parity_sign(i, p.phase_mask()) * state[i];
  }
  return out;
}

void apply_pauli_exponential_inplace(StateVector& state, const PauliString& p,
                                     double theta) {
  check_width(state.n_qubits(), p.n_qubits());
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (p.is_identity()) {
    // exp(-i theta I) is a global phase.
    const Complex f(c, -s);
    for (auto& a : state.amplitudes()) a *= f;
    return;
  }
  // -i sin(theta) * i^{#Y}
  const Complex k = Complex(0.0, -s) * y_phase(p.y_count());
  const auto flip = static_cast<std::size_t>(p.flip_mask());
  const std::uint64_t mask = p.phase_mask();
  // flip != 0 here, so i and i ^ flip pair up; visit each pair once.
  const std::size_t top = std::size_t{1} << (std::bit_width(flip) - 1);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (i & top) continue;
    const std::size_t j = i ^ flip;
    const Complex ai = state[i];
    const Complex aj = state[j];
    // (P psi)[j] = phase * sign(i) * psi[i], (P psi)[i] = phase * sign(j) * psi[j]
    state[i] = c * ai + k * parity_sign(j, mask) * aj;
    state[j] = c * aj + k * parity_sign(i, mask) * ai;
  }
}

StateVector apply_pauli_exponential(StateVector state, const PauliString& p,
                                    double theta) {
  apply_pauli_exponential_inplace(state, p, theta);
  return state;
}

double expectation(const StateVector& state, const PauliString& p) {
  check_width(state.n_qubits(), p.n_qubits());
  const auto flip = static_cast<std::size_t>(p.flip_mask());
  Complex acc{};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    acc += std::conj(state[i ^ flip]) * parity_sign(i, p.phase_mask()) * state[i];
  }
  acc *= y_phase(p.y_count());
  if (std::abs(acc.imag()) > 1e-12 * std::max(1.0, state.norm())) {
    throw std::logic_error("expectation of a Hermitian word has imaginary part");
  }
  return acc.real();
}

double energy(const StateVector& state, const Hamiltonian& h) {
  if (h.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("Hamiltonian acts on " +
                                std::to_string(h.n_qubits()) +
                                " qubits but the state has " +
                                std::to_string(state.n_qubits()));
  }
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coeff * expectation(state, t.pauli);
  return e;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace snakevqe
