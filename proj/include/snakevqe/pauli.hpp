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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snakevqe {

/** Malformed input data: bad Pauli words, schema violations, bad grids. */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest word length a PauliString accepts (bit masks are 64-bit).
inline constexpr std::size_t kMaxPauliQubits = 62;

/**
 * A tensor product of single-qubit Pauli operators, one letter per qubit.
 *
 * Letter k acts on qubit k; qubit 0 is the leftmost letter. In the
 * computational-basis index used by StateVector, qubit 0 is the most
 * significant bit, so letter k maps to bit (n - 1 - k).
 *
 * The action on a basis state |i> is
 *   P|i> = i^{#Y} (-1)^{popcount(i & phase_mask)} |i ^ flip_mask>
 * where flip_mask marks X/Y letters and phase_mask marks Y/Z letters.
 */
class PauliString {
 public:
  /// Validates `text` against the alphabet {I,X,Y,Z} and the expected length.
  static PauliString parse(std::string_view text, std::size_t n_qubits);

  /// Shorthand for parse(word, word.size()).
  explicit PauliString(std::string_view word);

  const std::string& word() const { return word_; }
  std::size_t n_qubits() const { return word_.size(); }
  char operator[](std::size_t qubit) const { return word_[qubit]; }

  bool is_identity() const { return flip_mask_ == 0 && phase_mask_ == 0; }
  std::uint64_t flip_mask() const { return flip_mask_; }
  std::uint64_t phase_mask() const { return phase_mask_; }
  int y_count() const { return y_count_; }

  /// Identity word on n qubits.
  static PauliString identity(std::size_t n_qubits);

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.word_ == b.word_;
  }
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    return a.word_ <=> b.word_;
  }

 private:
  PauliString() = default;

  std::string word_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t phase_mask_ = 0;
  int y_count_ = 0;
};

/// Free-function form of PauliString::parse.
PauliString parse_pauli_string(std::string_view text, std::size_t n_qubits);

}  // namespace snakevqe
