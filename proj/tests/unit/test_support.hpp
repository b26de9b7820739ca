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

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "snakevqe/hamiltonian.hpp"

namespace snakevqe::testing {

/// Random real Hamiltonian over every Pauli word on n qubits.
inline Hamiltonian random_hamiltonian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<PauliTerm> terms;
  std::size_t words = 1;
  for (std::size_t q = 0; q < n; ++q) words *= 4;
  for (std::size_t w = 0; w < words; ++w) {
    std::string word(n, 'I');
    std::size_t code = w;
    for (std::size_t q = 0; q < n; ++q) {
      word[q] = "IXYZ"[code % 4];
      code /= 4;
    }
    terms.push_back({coeff(rng), PauliString(word)});
  }
  return Hamiltonian(n, std::move(terms));
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("snakevqe_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace snakevqe::testing
