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

#include "qminority/channels.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>

namespace qminority {

namespace {

void require_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(v) +
                                " outside [0, 1]");
  }
}

KrausSet checked(std::vector<Operator16> ops, const char* who) {
  KrausSet ks(std::move(ops));
  if (ks.completeness_residual() > tol::kChannel) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: completeness residual %.3e exceeds %.1e", who,
                  ks.completeness_residual(), tol::kChannel);
    throw ChannelConstructionError(buf);
  }
  return ks;
}

Operator16 pauli_string(const std::array<int, 4>& indices) {
  const std::array<ComplexMatrix, 4> factors = {pauli(indices[0]), pauli(indices[1]),
                                                pauli(indices[2]), pauli(indices[3])};
  return to_operator16(tensor_all(factors));
}

}  // namespace

std::string_view channel_token(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return "ad";
    case ChannelKind::Depolarizing: return "dep";
    case ChannelKind::BitFlip: return "bf";
    case ChannelKind::PhaseFlip: return "pf";
    case ChannelKind::BitPhaseFlip: return "bpf";
  }
  return "?";
}

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return "amplitude damping";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::BitFlip: return "bit flip";
    case ChannelKind::PhaseFlip: return "phase flip";
    case ChannelKind::BitPhaseFlip: return "bit-phase flip";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view token) {
  for (auto kind : kAllChannels) {
    if (channel_token(kind) == token) return kind;
  }
  return std::nullopt;
}

void ChannelSpec::validate() const {
  require_probability(p, "p");
  require_probability(mu, "mu");
}

PauliProbVector pauli_prob_vector(ChannelKind kind, double p) {
  require_probability(p, "p");
  switch (kind) {
    case ChannelKind::BitFlip: return {{1.0 - p, p, 0.0, 0.0}};
    case ChannelKind::BitPhaseFlip: return {{1.0 - p, 0.0, p, 0.0}};
    case ChannelKind::PhaseFlip: return {{1.0 - p, 0.0, 0.0, p}};
    case ChannelKind::Depolarizing:
      return {{1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p}};
    case ChannelKind::AmplitudeDamping: break;
  }
  throw std::invalid_argument("pauli_prob_vector: amplitude damping is not a Pauli channel");
}

KrausSet pauli_memory_kraus(ChannelKind kind, double p, double mu) {
  require_probability(mu, "mu");
  const auto alpha = pauli_prob_vector(kind, p).alpha;

  std::vector<Operator16> ops;
  std::array<int, 4> idx{};
  for (int t = 0; t < 256; ++t) {
    for (int q = 0; q < kQubits; ++q) idx[q] = (t >> (2 * (kQubits - 1 - q))) & 3;
    double weight = alpha[idx[3]];
    for (int m = 0; m < kQubits - 1; ++m) {
      weight *= (1.0 - mu) * alpha[idx[m]] + (idx[m] == idx[m + 1] ? mu : 0.0);
    }
    if (weight < tol::kPruneWeight) continue;
    ops.push_back(std::sqrt(weight) * pauli_string(idx));
  }
  return checked(std::move(ops), "pauli_memory_kraus");
}

std::vector<Operator16> ad_uncorrelated_kraus(double p) {
  require_probability(p, "p");
  ComplexMatrix a0 = ComplexMatrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - p);
  ComplexMatrix a1 = ComplexMatrix::Zero(2, 2);
  a1(0, 1) = std::sqrt(p);
  const std::array<ComplexMatrix, 2> single = {a0, a1};

  std::vector<Operator16> ops;
  ops.reserve(16);
  for (int t = 0; t < 16; ++t) {
    std::array<ComplexMatrix, 4> factors;
    for (int q = 0; q < kQubits; ++q) factors[q] = single[(t >> (kQubits - 1 - q)) & 1];
    ops.push_back(to_operator16(tensor_all(factors)));
  }
  return ops;
}

std::array<Operator16, 2> ad_correlated_kraus(double p) {
  require_probability(p, "p");
  const double sin_chi = std::sqrt(p);
  const double cos_chi = std::sqrt(1.0 - p);
  Operator16 a00 = Operator16::Identity();
  a00(0, 0) = cos_chi;
  Operator16 a11 = Operator16::Zero();
  a11(kDim - 1, 0) = sin_chi;
  return {a00, a11};
}

KrausSet build_channel(const ChannelSpec& spec) {
  spec.validate();
  if (spec.kind != ChannelKind::AmplitudeDamping) {
    return pauli_memory_kraus(spec.kind, spec.p, spec.mu);
  }

  std::vector<Operator16> ops;
  const auto keep = [&ops](const Operator16& a, double weight) {
    if (weight < tol::kPruneWeight) return;
    // Operators built from sqrt(p) factors vanish entirely at p = 0 or 1.
    if (a.cwiseAbs2().sum() * weight < tol::kPruneWeight) return;
    ops.push_back(std::sqrt(weight) * a);
  };
  for (const auto& a : ad_uncorrelated_kraus(spec.p)) keep(a, 1.0 - spec.mu);
  for (const auto& a : ad_correlated_kraus(spec.p)) keep(a, spec.mu);
  return checked(std::move(ops), "build_channel");
}

double verify_completeness(const KrausSet& ks) { return ks.completeness_residual(); }

std::shared_ptr<const KrausSet> KrausCache::get(const ChannelSpec& spec) {
  const Key key{static_cast<int>(spec.kind), spec.p, spec.mu};
  {
    std::shared_lock lock(mutex_);
    if (auto it = sets_.find(key); it != sets_.end()) return it->second;
  }
  auto built = std::make_shared<const KrausSet>(build_channel(spec));
  std::unique_lock lock(mutex_);
  return sets_.try_emplace(key, std::move(built)).first->second;
}

std::size_t KrausCache::size() const {
  std::shared_lock lock(mutex_);
  return sets_.size();
}

}  // namespace qminority
