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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "snakevqe/hamiltonian.hpp"
#include "snakevqe/pauli.hpp"

namespace snakevqe {

using Complex = std::complex<double>;

/// Dense simulation is capped here; the ansatzes of interest use at most 5.
inline constexpr std::size_t kMaxSimQubits = 20;

/**
 * Dense state on n qubits. Index i encodes b0 b1 ... b_{n-1} with qubit 0
 * as the most significant bit, so "01" is index 1 and "0011" is index 3.
 */
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// |bits>, e.g. basis_state("01") for the two-qubit reference state.
StateVector basis_state(std::string_view bits);

/// P|state>.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

/// exp(-i theta P)|state> = cos(theta)|state> - i sin(theta) P|state>.
StateVector apply_pauli_exponential(StateVector state, const PauliString& p,
                                    double theta);
void apply_pauli_exponential_inplace(StateVector& state, const PauliString& p,
                                     double theta);

/// <state|P|state>; the imaginary part is checked to vanish and dropped.
double expectation(const StateVector& state, const PauliString& p);

/// sum_i c_i <state|P_i|state>.
double energy(const StateVector& state, const Hamiltonian& h);

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace snakevqe
