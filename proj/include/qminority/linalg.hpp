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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qminority {

using Complex = std::complex<double>;

/// Dense complex matrix of any small dimension (2, 4 or 16 in practice).
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Operator on the four-qubit register.
using Operator16 = Eigen::Matrix<Complex, 16, 16>;

inline constexpr int kQubits = 4;
inline constexpr int kDim = 16;

namespace tol {
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kChannel = 1e-10;
inline constexpr double kMinEigenvalue = 1e-10;
inline constexpr double kPruneWeight = 1e-300;
}  // namespace tol

/// Raised when a documented precondition on a quantum object is broken,
/// e.g. an operator-sum applied with an incomplete Kraus set.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Four-qubit density matrix in the computational basis |q1 q2 q3 q4>,
/// player 1's qubit being the most significant bit of the basis index.
///
/// Construction does not validate; use validate_density() for that.
class DensityMatrix {
 public:
  DensityMatrix() : m_(Operator16::Zero()) {}
  explicit DensityMatrix(const Operator16& m) : m_(m) {}

  static DensityMatrix basis_state(int index);
  static DensityMatrix maximally_mixed();
  /// |psi><psi| for a (normalised) state vector.
  static DensityMatrix from_state(const Eigen::Matrix<Complex, 16, 1>& psi);

  const Operator16& matrix() const noexcept { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  /// Probability of reading out basis state `index`.
  double population(int index) const { return m_(index, index).real(); }
  double trace() const { return m_.trace().real(); }

 private:
  Operator16 m_;
};

/// Operators of one channel application. The completeness residual
/// max|sum A^dagger A - I| is computed once on construction.
class KrausSet {
 public:
  KrausSet() = default;
  explicit KrausSet(std::vector<Operator16> operators);

  std::span<const Operator16> operators() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  const Operator16& operator[](std::size_t i) const { return ops_[i]; }
  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }

  double completeness_residual() const noexcept { return residual_; }

 private:
  std::vector<Operator16> ops_;
  double residual_ = 1.0;
};

double completeness_residual(std::span<const Operator16> operators);

/// Pauli matrix: 0 -> I, 1 -> sigma_x, 2 -> sigma_y, 3 -> sigma_z.
ComplexMatrix pauli(int index);

/// Kronecker product; `a` occupies the more significant index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left-to-right Kronecker product of all factors.
ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors);

Operator16 to_operator16(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::kAlgebraic);

/// U rho U^dagger. Throws std::invalid_argument if `u` is not unitary.
DensityMatrix conjugate(const DensityMatrix& rho, const Operator16& u);

/// sum_k A_k rho A_k^dagger. Throws ContractViolation if the set's
/// completeness residual exceeds tol::kChannel.
DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausSet& ks);

struct DensityReport {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool passed = false;

  std::string describe() const;
};

DensityReport validate_density(const DensityMatrix& rho);

/// Eigenvalues of the Hermitian part of `m`, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qminority
