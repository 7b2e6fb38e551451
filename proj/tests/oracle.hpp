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

// Test-only reference routines. Deliberately written with plain index
// loops over std::vector and no library calls, so they share no code path
// with the Eigen-based implementation under test.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qminority/linalg.hpp"

namespace qminority::oracle {

using C = std::complex<double>;

struct Mat {
  int n = 0;
  std::vector<C> a;

  explicit Mat(int dim = 0) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
  C& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  C operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

inline Mat from_op(const Operator16& m) {
  Mat out(16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) out(r, c) = m(r, c);
  return out;
}

inline Operator16 to_op(const Mat& m) {
  Operator16 out;
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) out(r, c) = m(r, c);
  return out;
}

inline Mat mul(const Mat& x, const Mat& y) {
  Mat out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k)
      for (int j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

inline Mat dagger(const Mat& x) {
  Mat out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) out(i, j) = std::conj(x(j, i));
  return out;
}

inline Mat single(C a, C b, C c, C d) {
  Mat m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline Mat pauli2(int k) {
  const C i{0, 1};
  switch (k) {
    case 1: return single(0, 1, 1, 0);
    case 2: return single(0, -i, i, 0);
    case 3: return single(1, 0, 0, -1);
    default: return single(1, 0, 0, 1);
  }
}

/// Embeds a 2x2 operator acting on `qubit` (0 = most significant) into 16x16.
inline Mat on_qubit(const Mat& g, int qubit) {
  Mat out(16);
  const int shift = 3 - qubit;
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      const int rest_r = r & ~(1 << shift);
      const int rest_c = c & ~(1 << shift);
      if (rest_r != rest_c) continue;
      out(r, c) = g((r >> shift) & 1, (c >> shift) & 1);
    }
  }
  return out;
}

/// Same single-qubit operator on every qubit, built as a product of
/// embedded factors (they commute).
inline Mat on_all(const Mat& g) {
  Mat out = on_qubit(g, 0);
  for (int q = 1; q < 4; ++q) out = mul(out, on_qubit(g, q));
  return out;
}

inline Mat sandwich_sum(const std::vector<Mat>& ks, const Mat& rho) {
  Mat out(rho.n);
  for (const auto& k : ks) {
    const Mat t = mul(mul(k, rho), dagger(k));
    for (std::size_t e = 0; e < out.a.size(); ++e) out.a[e] += t.a[e];
  }
  return out;
}

/// Memoryless channel: the single-qubit Kraus family applied qubit by qubit.
inline Mat memoryless(const std::vector<Mat>& single_kraus, Mat rho) {
  for (int q = 0; q < 4; ++q) {
    std::vector<Mat> embedded;
    for (const auto& k : single_kraus) embedded.push_back(on_qubit(k, q));
    rho = sandwich_sum(embedded, rho);
  }
  return rho;
}

/// Fully correlated Pauli channel: rho -> sum_k alpha_k S_k rho S_k with S_k = sigma_k on all qubits.
inline Mat fully_correlated(const std::array<double, 4>& alpha, const Mat& rho) {
  std::vector<Mat> ks;
  for (int k = 0; k < 4; ++k) {
    Mat s = on_all(pauli2(k));
    for (auto& e : s.a) e *= std::sqrt(alpha[k]);
    ks.push_back(s);
  }
  return sandwich_sum(ks, rho);
}

inline std::vector<Mat> single_pauli_kraus(const std::array<double, 4>& alpha) {
  std::vector<Mat> ks;
  for (int k = 0; k < 4; ++k) {
    Mat s = pauli2(k);
    for (auto& e : s.a) e *= std::sqrt(alpha[k]);
    ks.push_back(s);
  }
  return ks;
}

inline std::vector<Mat> single_ad_kraus(double p) {
  return {single(1, 0, 0, std::sqrt(1 - p)), single(0, std::sqrt(p), 0, 0)};
}

inline double completeness_residual(const std::vector<Operator16>& ops) {
  Mat sum(16);
  for (const auto& op : ops) {
    const Mat a = from_op(op);
    const Mat t = mul(dagger(a), a);
    for (std::size_t e = 0; e < sum.a.size(); ++e) sum.a[e] += t.a[e];
  }
  double worst = 0;
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) worst = std::max(worst, std::abs(sum(r, c) - C(r == c ? 1 : 0)));
  return worst;
}

inline double max_diff(const Mat& x, const Mat& y) {
  double worst = 0;
  for (std::size_t e = 0; e < x.a.size(); ++e) worst = std::max(worst, std::abs(x.a[e] - y.a[e]));
  return worst;
}

/// Random mixed state: G G^dagger / tr for a complex Gaussian G.
inline DensityMatrix random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator16 g;
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) g(r, c) = C(n(rng), n(rng));
  Operator16 rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

inline Operator16 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator16 g;
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) g(r, c) = C(n(rng), n(rng));
  Eigen::HouseholderQR<Operator16> qr(g);
  return qr.householderQ() * Operator16::Identity();
}

}  // namespace qminority::oracle
