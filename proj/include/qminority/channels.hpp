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

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "qminority/linalg.hpp"

namespace qminority {

enum class ChannelKind { AmplitudeDamping, Depolarizing, BitFlip, PhaseFlip, BitPhaseFlip };

inline constexpr std::array<ChannelKind, 5> kAllChannels = {
    ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing, ChannelKind::BitPhaseFlip,
    ChannelKind::BitFlip, ChannelKind::PhaseFlip};

/// Short CLI token: ad, dep, bf, pf, bpf.
std::string_view channel_token(ChannelKind kind);
std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view token);

/// Thrown when a built Kraus set fails its completeness check.
class ChannelConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Noise applied to all four qubits: decoherence probability p and
/// memory (correlation) degree mu, both in [0, 1].
struct ChannelSpec {
  ChannelKind kind = ChannelKind::PhaseFlip;
  double p = 0.0;
  double mu = 0.0;

  /// Throws std::invalid_argument when p or mu leave [0, 1].
  void validate() const;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

/// Probabilities (alpha_0..alpha_3) of applying I, X, Y, Z to one qubit.
struct PauliProbVector {
  std::array<double, 4> alpha{1.0, 0.0, 0.0, 0.0};
};

PauliProbVector pauli_prob_vector(ChannelKind kind, double p);

/// Markov-chained Pauli channel on four qubits:
///
///   A_{i1 i2 i3 i4} = sqrt(alpha_{i4} prod_{m=1..3} [(1-mu) alpha_{im} + mu delta_{im,im+1}])
///                     sigma_{i1} (x) sigma_{i2} (x) sigma_{i3} (x) sigma_{i4}
///
/// Tuples with weight below tol::kPruneWeight are dropped. At mu = 0 this is
/// the four-fold tensor power of the single-qubit channel; at mu = 1 only the
/// diagonal tuples i1 = i2 = i3 = i4 survive.
KrausSet pauli_memory_kraus(ChannelKind kind, double p, double mu);

/// All 16 four-qubit products of A0 = diag(1, sqrt(1-p)), A1 = sqrt(p)|0><1|,
/// in lexicographic order of the per-qubit index (qubit 1 most significant).
/// Zero operators are kept here; build_channel prunes them.
std::vector<Operator16> ad_uncorrelated_kraus(double p);

/// Collective amplitude damping on four qubits with sin(chi) = sqrt(p):
/// A00 is the identity with its |0000><0000| entry replaced by cos(chi);
/// A11 = sin(chi)|1111><0000|. Only the all-ground component is damped.
std::array<Operator16, 2> ad_correlated_kraus(double p);

/// Kraus set for a channel spec. Amplitude damping mixes the uncorrelated
/// (weight 1-mu) and correlated (weight mu) operator families.
KrausSet build_channel(const ChannelSpec& spec);

/// max entrywise |sum A^dagger A - I|.
double verify_completeness(const KrausSet& ks);

/// Kraus sets keyed by (kind, p, mu). Safe for concurrent use.
class KrausCache {
 public:
  std::shared_ptr<const KrausSet> get(const ChannelSpec& spec);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, double, double>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const KrausSet>> sets_;
};

}  // namespace qminority
