// Copyright 2026 The qminority Authors
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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qminority/channels.hpp"
#include "qminority/linalg.hpp"

using namespace qminority;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(d(rng), d(rng)) / 4.0;
  return m;
}

}  // namespace

TEST(Pauli, StandardMatrices) {
  EXPECT_EQ(pauli(0), mat2(1, 0, 0, 1));
  EXPECT_EQ(pauli(1), mat2(0, 1, 1, 0));
  EXPECT_EQ(pauli(2), mat2(0, Complex(0, -1), Complex(0, 1), 0));
  EXPECT_EQ(pauli(3), mat2(1, 0, 0, -1));
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(is_unitary(pauli(k)));
    EXPECT_EQ(pauli(k), pauli(k).adjoint());
  }
}

TEST(Pauli, RejectsOutOfRangeIndex) {
  EXPECT_THROW(pauli(-1), std::invalid_argument);
  EXPECT_THROW(pauli(4), std::invalid_argument);
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor(pauli(0), pauli(0)), ComplexMatrix::Identity(4, 4));

  Eigen::VectorXcd ket00 = Eigen::VectorXcd::Zero(4);
  ket00(0) = 1.0;
  const Eigen::VectorXcd flipped = tensor(pauli(1), pauli(1)) * ket00;
  EXPECT_EQ(flipped, Eigen::VectorXcd::Unit(4, 3));

  Eigen::VectorXcd zz(4);
  zz << 1, -1, -1, 1;
  EXPECT_EQ(tensor(pauli(3), pauli(3)), ComplexMatrix(zz.asDiagonal()));
}

TEST(Tensor, BlockStructure) {
  std::mt19937_64 rng(7);
  const auto a = random_matrix(rng, 2, 3);
  const auto b = random_matrix(rng, 4, 2);
  const auto t = tensor(a, b);
  ASSERT_EQ(t.rows(), 8);
  ASSERT_EQ(t.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) EXPECT_EQ(t(i * 4 + k, j * 2 + l), a(i, j) * b(k, l));
}

TEST(Tensor, AssociativeExactly) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // Dyadic-rational entries keep every product exact in floating point.
    const auto a = random_matrix(rng, 2, 2);
    const auto b = random_matrix(rng, 2, 2);
    const auto c = random_matrix(rng, 4, 4);
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  }
}

TEST(Conjugate, IdentityAndGlobalFlip) {
  std::mt19937_64 rng(3);
  const auto rho = oracle::random_density(rng);
  EXPECT_LT(max_abs(conjugate(rho, Operator16::Identity()).matrix() - rho.matrix()), 1e-15);

  const std::array<ComplexMatrix, 4> xs = {pauli(1), pauli(1), pauli(1), pauli(1)};
  const auto out = conjugate(DensityMatrix::basis_state(0), to_operator16(tensor_all(xs)));
  EXPECT_EQ(out.matrix(), DensityMatrix::basis_state(15).matrix());
}

TEST(Conjugate, PreservesTraceAndSpectrum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = oracle::random_density(rng);
    const auto u = oracle::random_unitary(rng);
    const auto out = conjugate(rho, u);
    EXPECT_NEAR(out.trace(), 1.0, 1e-12);
    const Eigen::VectorXd before = hermitian_eigenvalues(rho.matrix());
    const Eigen::VectorXd after = hermitian_eigenvalues(out.matrix());
    EXPECT_LT((before - after).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Conjugate, RejectsNonUnitary) {
  EXPECT_THROW(conjugate(DensityMatrix::maximally_mixed(), 2.0 * Operator16::Identity()),
               std::invalid_argument);
}

TEST(ApplyKraus, IdentitySetLeavesStateUnchanged) {
  std::mt19937_64 rng(9);
  const auto rho = oracle::random_density(rng);
  const KrausSet ks({Operator16::Identity()});
  EXPECT_EQ(apply_kraus(rho, ks).matrix(), rho.matrix());
}

TEST(ApplyKraus, FullBitFlipSendsGroundToAllOnes) {
  const auto out = apply_kraus(DensityMatrix::basis_state(0),
                               build_channel({ChannelKind::BitFlip, 1.0, 0.0}));
  EXPECT_LT(max_abs(out.matrix() - DensityMatrix::basis_state(15).matrix()), 1e-15);
}

TEST(ApplyKraus, FullDepolarizationGivesMaximallyMixed) {
  std::mt19937_64 rng(13);
  const auto ks = build_channel({ChannelKind::Depolarizing, 1.0, 0.0});
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = oracle::random_density(rng);
    // Oracle: per-qubit operator sum of the single-qubit depolarizing family.
    const auto expected = oracle::memoryless(
        oracle::single_pauli_kraus({0.25, 0.25, 0.25, 0.25}), oracle::from_op(rho.matrix()));
    EXPECT_LT(oracle::max_diff(expected, oracle::from_op(DensityMatrix::maximally_mixed().matrix())),
              1e-14);
    EXPECT_LT(max_abs(apply_kraus(rho, ks).matrix() - DensityMatrix::maximally_mixed().matrix()),
              1e-14);
  }
}

TEST(ApplyKraus, IncompleteSetIsContractViolation) {
  const KrausSet ks({std::sqrt(0.5) * Operator16::Identity()});
  try {
    apply_kraus(DensityMatrix::maximally_mixed(), ks);
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("completeness residual 5.000e-01"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(apply_kraus(DensityMatrix::maximally_mixed(), KrausSet{}), ContractViolation);
}

TEST(ValidateDensity, Examples) {
  const auto mixed = validate_density(DensityMatrix::maximally_mixed());
  EXPECT_TRUE(mixed.passed);
  EXPECT_NEAR(mixed.min_eigenvalue, 1.0 / 16, 1e-14);

  const auto pure = validate_density(DensityMatrix::basis_state(0));
  EXPECT_TRUE(pure.passed);
  EXPECT_NEAR(pure.min_eigenvalue, 0.0, 1e-14);

  const auto short_trace = validate_density(DensityMatrix(0.9 * DensityMatrix::basis_state(0).matrix()));
  EXPECT_FALSE(short_trace.passed);
  EXPECT_NEAR(short_trace.trace_residual, 0.1, 1e-15);
}

TEST(ValidateDensity, FlagsNonHermitianAndNegative) {
  Operator16 m = DensityMatrix::maximally_mixed().matrix();
  m(0, 1) = 0.01;
  EXPECT_FALSE(validate_density(DensityMatrix(m)).passed);

  Operator16 neg = Operator16::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  const auto report = validate_density(DensityMatrix(neg));
  EXPECT_FALSE(report.passed);
  EXPECT_NEAR(report.min_eigenvalue, -0.5, 1e-14);
}

// Channel outputs stay valid density matrices over the whole 11 x 11 grid.
TEST(ApplyKraus, TraceHermiticityPositivityOnGrid) {
  std::mt19937_64 rng(17);
  const auto rho = oracle::random_density(rng);
  const auto pure = DensityMatrix::basis_state(0);
  for (auto kind : kAllChannels) {
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const KrausSet ks = build_channel({kind, i / 10.0, j / 10.0});
        for (const auto* in : {&rho, &pure}) {
          const auto report = validate_density(apply_kraus(*in, ks));
          ASSERT_LT(report.trace_residual, 1e-10) << channel_token(kind) << " " << i << "," << j;
          ASSERT_LT(report.hermiticity_residual, 1e-12);
          ASSERT_GE(report.min_eigenvalue, -1e-10);
        }
      }
    }
  }
}
