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

#include "qminority/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qminority {

namespace {

double max_abs_entry(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

}  // namespace

DensityMatrix DensityMatrix::basis_state(int index) {
  if (index < 0 || index >= kDim) {
    throw std::invalid_argument("basis_state: index " + std::to_string(index) +
                                " outside 0..15");
  }
  Operator16 m = Operator16::Zero();
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Operator16::Identity() / static_cast<double>(kDim));
}

DensityMatrix DensityMatrix::from_state(const Eigen::Matrix<Complex, 16, 1>& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

KrausSet::KrausSet(std::vector<Operator16> operators)
    : ops_(std::move(operators)), residual_(qminority::completeness_residual(ops_)) {}

double completeness_residual(std::span<const Operator16> operators) {
  Operator16 sum = Operator16::Zero();
  for (const auto& a : operators) {
    sum.noalias() += a.adjoint() * a;
  }
  return max_abs_entry(sum - Operator16::Identity());
}

ComplexMatrix pauli(int index) {
  const Complex i{0.0, 1.0};
  ComplexMatrix s(2, 2);
  switch (index) {
    case 0:
      s << 1.0, 0.0, 0.0, 1.0;
      break;
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -i, i, 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index " + std::to_string(index) +
                                  " outside 0..3");
  }
  return s;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) {
    out = tensor(out, f);
  }
  return out;
}

Operator16 to_operator16(const ComplexMatrix& m) {
  if (m.rows() != kDim || m.cols() != kDim) {
    throw std::invalid_argument("to_operator16: expected 16x16, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
  return m;
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix defect = u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs_entry(defect) <= tolerance;
}

DensityMatrix conjugate(const DensityMatrix& rho, const Operator16& u) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("conjugate: operator is not unitary within 1e-12");
  }
  Operator16 out;
  out.noalias() = u * rho.matrix() * u.adjoint();
  return DensityMatrix(out);
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausSet& ks) {
  if (ks.empty() || ks.completeness_residual() > tol::kChannel) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "apply_kraus: Kraus set incomplete, completeness residual %.3e",
                  ks.empty() ? 1.0 : ks.completeness_residual());
    throw ContractViolation(buf);
  }
  Operator16 acc = Operator16::Zero();
  Operator16 tmp;
  for (const auto& a : ks) {
    tmp.noalias() = a * rho.matrix();
    acc.noalias() += tmp * a.adjoint();
  }
  return DensityMatrix(acc);
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityReport validate_density(const DensityMatrix& rho) {
  const ComplexMatrix m = rho.matrix();
  DensityReport report;
  report.hermiticity_residual = max_abs_entry(m - m.adjoint());
  report.trace_residual = std::abs(m.trace() - Complex{1.0, 0.0});
  report.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
  report.passed = report.hermiticity_residual < tol::kAlgebraic &&
                  report.trace_residual < tol::kAlgebraic &&
                  report.min_eigenvalue >= -tol::kMinEigenvalue;
  return report;
}

std::string DensityReport::describe() const {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "hermiticity %.3e, trace %.3e, min eigenvalue %.3e (%s)",
                hermiticity_residual, trace_residual, min_eigenvalue,
                passed ? "ok" : "FAILED");
  return buf;
}

}  // namespace qminority
