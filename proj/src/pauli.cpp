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

#include "snakevqe/pauli.hpp"

#include <string>

namespace snakevqe {

PauliString PauliString::parse(std::string_view text, std::size_t n_qubits) {
  if (n_qubits == 0) {
    throw InputError("Pauli word must act on at least one qubit");
  }
  if (n_qubits > kMaxPauliQubits) {
    throw InputError("Pauli word longer than " +
                     std::to_string(kMaxPauliQubits) + " qubits");
  }
  if (text.size() != n_qubits) {
    throw InputError("Pauli word '" + std::string(text) + "' has length " +
                     std::to_string(text.size()) + ", expected " +
                     std::to_string(n_qubits));
  }
  PauliString p;
  p.word_ = std::string(text);
  for (std::size_t k = 0; k < n_qubits; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - k);
    switch (text[k]) {
      case 'I':
        break;
      case 'X':
        p.flip_mask_ |= bit;
        break;
      case 'Y':
        p.flip_mask_ |= bit;
        p.phase_mask_ |= bit;
        ++p.y_count_;
        break;
      case 'Z':
        p.phase_mask_ |= bit;
        break;
      default:
        throw InputError("illegal character '" + std::string(1, text[k]) +
                         "' in Pauli word '" + std::string(text) + "'");
    }
  }
  return p;
}

PauliString::PauliString(std::string_view word)
    : PauliString(parse(word, word.size())) {}

PauliString PauliString::identity(std::size_t n_qubits) {
  return parse(std::string(n_qubits, 'I'), n_qubits);
}

PauliString parse_pauli_string(std::string_view text, std::size_t n_qubits) {
  return PauliString::parse(text, n_qubits);
}

}  // namespace snakevqe
