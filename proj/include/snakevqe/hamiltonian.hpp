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

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "snakevqe/pauli.hpp"

namespace snakevqe {

struct PauliTerm {
  double coeff;
  PauliString pauli;
};

/**
 * A real-weighted sum of Pauli words on a fixed number of qubits.
 *
 * Construction merges duplicate words (coefficients summed), drops terms
 * whose merged coefficient is exactly zero, and stores the result sorted
 * by word. Merging sorts the contributions of each word before summing, so
 * the result does not depend on the input order.
 */
class Hamiltonian {
 public:
  Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Coefficient of `word`, or 0 when the word is absent.
  double coeff(std::string_view word) const;

  Hamiltonian scaled(double factor) const;
  Hamiltonian shifted(double constant) const;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

struct FamilyPoint {
  double lambda;
  Hamiltonian hamiltonian;
};

/**
 * Ordered (lambda, Hamiltonian) pairs sharing one qubit count.
 *
 * Points are sorted by lambda on construction; lambda must then be strictly
 * increasing and the family non-empty.
 */
class HamiltonianFamily {
 public:
  HamiltonianFamily(std::string parameter_name, std::vector<FamilyPoint> points);

  const std::string& parameter_name() const { return parameter_name_; }
  const std::vector<FamilyPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t n_qubits() const { return points_.front().hamiltonian.n_qubits(); }
  std::vector<double> lambdas() const;

 private:
  std::string parameter_name_;
  std::vector<FamilyPoint> points_;
};

HamiltonianFamily family_from_json(const nlohmann::json& doc);
nlohmann::json family_to_json(const HamiltonianFamily& family);

HamiltonianFamily load_family(const std::filesystem::path& path);
void save_family(const HamiltonianFamily& family, const std::filesystem::path& path);

// Synthetic two-qubit family with the six-term structure
//   c0 II + c1 ZI + c2 IZ + c3 ZZ + c4 XX + c5 YY.
//
// The coefficients are smooth analytic functions of lambda. At lambda = 0
// they equal the anchor set (0, 0.5, -0.5, 0.2, 0.3, 0.3). Away from zero,
// a Gaussian switch w(lambda) = exp(-(lambda/0.07)^2) hands over to an
// H2-like regime:
//   d(lambda) = c1 - c2 = -(0.55 + 0.3 exp(-(lambda - 0.25)))
//   o(lambda) = c4 + c5 = -0.2 d(lambda) (1 + 0.5 bump((lambda - 1.55)/0.7))
//   c0 = 0.9 exp(-1.2 lambda) - 0.55,  c3 = 0.15 + 0.05 tanh(lambda - 1.5)
// where bump(x) = exp(1 - 1/(1 - x^2)) on |x| < 1 and 0 elsewhere. On the
// default grid [0.25, 2.85] the ground state lives in span{|01>, |10>}, the
// reference |01> dominates it, and the optimal UCC angle is identical at
// both ends of the grid.
inline constexpr std::array<double, 6> kSynthH2Anchor = {0.0, 0.5, -0.5,
                                                         0.2, 0.3, 0.3};
inline constexpr std::array<std::string_view, 6> kH2Words = {"II", "ZI", "IZ",
                                                             "ZZ", "XX", "YY"};

std::array<double, 6> synth_h2_coefficients(double lambda);
Hamiltonian synth_h2_point(double lambda);
Hamiltonian h2_structure_hamiltonian(const std::array<double, 6>& coeffs);

/// M uniformly spaced points on [lambda_min, lambda_max]; M >= 5.
HamiltonianFamily synth_h2_family(std::size_t points = 54,
                                  double lambda_min = 0.25,
                                  double lambda_max = 2.85);

}  // namespace snakevqe
