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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "snakevqe/oracle.hpp"
#include "snakevqe/statevector.hpp"
#include "test_support.hpp"

namespace snakevqe {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_amplitudes(const StateVector& s, const std::vector<Complex>& want,
                       double tol = 1e-12) {
  ASSERT_EQ(s.dim(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(s[i].real(), want[i].real(), tol) << "index " << i;
    EXPECT_NEAR(s[i].imag(), want[i].imag(), tol) << "index " << i;
  }
}

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& z : a) {
    z = {g(rng), g(rng)};
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return StateVector(n, std::move(a));
}

TEST(BasisState, EncodesQubitZeroAsMostSignificant) {
  EXPECT_EQ(basis_state("01")[1], Complex(1.0));
  EXPECT_EQ(basis_state("111")[7], Complex(1.0));
  const auto s = basis_state("0011");
  EXPECT_EQ(s[3], Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(BasisState, RejectsBadBits) {
  EXPECT_THROW(basis_state(""), InputError);
  EXPECT_THROW(basis_state("012"), InputError);
}

TEST(PauliExponential, ZeroAngleIsIdentity) {
  expect_amplitudes(apply_pauli_exponential(basis_state("01"), PauliString("XY"), 0.0),
                    {0, 1, 0, 0});
}

TEST(PauliExponential, HalfPiMapsToMinusTen) {
  expect_amplitudes(apply_pauli_exponential(basis_state("01"), PauliString("XY"), kPi / 2),
                    {0, 0, -1, 0});
}

TEST(PauliExponential, QuarterPiIsEqualSuperposition) {
  const double r = 1.0 / std::sqrt(2.0);
  expect_amplitudes(apply_pauli_exponential(basis_state("01"), PauliString("XY"), kPi / 4),
                    {0, r, -r, 0});
}

TEST(PauliExponential, LengthMismatchThrows) {
  EXPECT_THROW(apply_pauli_exponential(basis_state("01"), PauliString("XYZ"), 0.1),
               std::invalid_argument);
}

TEST(PauliExponential, AnglesCompose) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const char* words[] = {"XY", "ZX", "YY", "XI", "IZ"};
  for (const char* w : words) {
    const PauliString p(w);
    const auto s = random_state(2, rng);
    const double a = u(rng), b = u(rng);
    const auto once = apply_pauli_exponential(s, p, a + b);
    const auto twice = apply_pauli_exponential(apply_pauli_exponential(s, p, a), p, b);
    for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_NEAR(std::abs(once[i] - twice[i]), 0.0, 1e-12);
  }
}

TEST(PauliExponential, PreservesNorm) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-10, 10);
  auto s = random_state(4, rng);
  for (const char* w : {"XIYI", "IXIY", "XXXY", "ZZZZ", "IIII"}) {
    s = apply_pauli_exponential(s, PauliString(w), u(rng));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Expectation, ComputationalBasisEigenvalues) {
  EXPECT_EQ(expectation(basis_state("01"), PauliString("ZI")), 1.0);
  EXPECT_EQ(expectation(basis_state("01"), PauliString("IZ")), -1.0);
}

TEST(Expectation, XXOnRotatedState) {
  const double t = kPi / 8;
  const StateVector s(2, {0, std::cos(t), -std::sin(t), 0});
  EXPECT_NEAR(expectation(s, PauliString("XX")), -std::sin(kPi / 4), 1e-15);
}

TEST(Expectation, IdentityIsOne) {
  std::mt19937_64 rng(5);
  EXPECT_NEAR(expectation(random_state(3, rng), PauliString("III")), 1.0, 1e-12);
}

TEST(Energy, SingleTermAndZeroHamiltonian) {
  const Hamiltonian z(2, {{1.0, PauliString("ZI")}});
  EXPECT_EQ(energy(basis_state("01"), z), 1.0);
  std::mt19937_64 rng(6);
  const Hamiltonian zero(2, {{0.0, PauliString("XX")}, {0.0, PauliString("ZZ")}});
  EXPECT_EQ(energy(random_state(2, rng), zero), 0.0);
}

TEST(Energy, AnchorPointAtReferenceState) {
  EXPECT_NEAR(energy(basis_state("01"), h2_structure_hamiltonian(kSynthH2Anchor)), 0.8, 1e-15);
}

TEST(Energy, MismatchedQubitsThrow) {
  EXPECT_THROW(energy(basis_state("01"), Hamiltonian(3, {{1.0, PauliString("ZZZ")}})),
               std::invalid_argument);
}

TEST(Energy, MatchesDenseMatrixExpectation) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto h = testing::random_hamiltonian(n, rng);
      const auto s = random_state(n, rng);
      const Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(),
                                                 static_cast<Eigen::Index>(s.dim()));
      const double dense = (v.adjoint() * dense_matrix(h) * v)(0, 0).real();
      EXPECT_NEAR(energy(s, h), dense, 1e-10) << "n=" << n;
    }
  }
}

}  // namespace
}  // namespace snakevqe
