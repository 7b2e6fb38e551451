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
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qminority/channels.hpp"
#include "qminority/linalg.hpp"

namespace qminority {

inline constexpr int kPlayers = 4;

/// One player's SU(2) move M(theta, alpha, beta); theta in [0, pi],
/// alpha and beta in [-pi, pi].
struct StrategyTriple {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
  friend bool operator==(const StrategyTriple&, const StrategyTriple&) = default;
};

using PayoffVector = std::array<double, kPlayers>;

/// Full input to one evaluation of the noisy Eisert-scheme game. Both noise
/// stages must use the same channel kind.
struct GameConfig {
  double gamma = std::numbers::pi / 2;
  ChannelSpec noise_pre;
  ChannelSpec noise_post;
  std::array<StrategyTriple, kPlayers> strategies{};

  /// All four players at the equilibrium move, identical noise on both stages.
  static GameConfig at_equilibrium(ChannelKind kind, double p, double mu, double gamma);

  void validate() const;
};

struct GameResult {
  DensityMatrix final_state;
  PayoffVector payoffs{};
};

/// J(gamma) = exp(i gamma/2 X(x)X(x)X(x)X) = cos(gamma/2) I + i sin(gamma/2) X^{(x)4}.
Operator16 entangler(double gamma);

/// [[e^{ia} cos(t/2), i e^{ib} sin(t/2)], [i e^{-ib} sin(t/2), e^{-ia} cos(t/2)]]
ComplexMatrix strategy_unitary(const StrategyTriple& s);

/// M(pi/2, -pi/16, pi/16).
StrategyTriple ne_strategy();

/// 1 iff `player` (1..4) is the sole minority of `outcome`. Bit 3 of the
/// outcome is player 1, bit 0 is player 4.
int minority_payoff(unsigned outcome, int player);

/// Expected payoff per player from the computational-basis diagonal.
PayoffVector expected_payoffs(const DensityMatrix& rho);

/// rho_0 .. rho_5: initial, entangled, first noise, moves, second noise,
/// disentangled.
std::array<DensityMatrix, 6> game_stages(const GameConfig& cfg, KrausCache* cache = nullptr);

/// Runs the pipeline and evaluates payoffs. Throws ContractViolation if the
/// final state fails validate_density().
GameResult run_game(const GameConfig& cfg, KrausCache* cache = nullptr);

enum class SweepAxis { P, Mu, Gamma };

std::string_view axis_token(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view token);

struct CurveFixed {
  double p = 0.0;
  double mu = 0.0;
  double gamma = std::numbers::pi / 2;
};

struct CurvePoint {
  double abscissa = 0.0;
  double p = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  PayoffVector payoffs{};
};

/// Payoffs with every player at ne_strategy along a uniform grid of `points`
/// over the varied axis ([0,1] for p and mu, [0, pi/2] for gamma). The
/// varied axis' entry in `fixed` is ignored. Grid points are evaluated
/// concurrently; output order is grid order.
std::vector<CurvePoint> payoff_curve(ChannelKind kind, SweepAxis axis, const CurveFixed& fixed,
                                     std::size_t points, KrausCache* cache = nullptr);

struct BestResponse {
  StrategyTriple strategy;
  double payoff = 0.0;
};

/// Exhaustive search over the (theta, alpha, beta) lattice with `grid`
/// points per axis for `player` (1..4), others held at cfg. Ties go to the
/// lowest lattice index (theta-major, then alpha, then beta).
BestResponse best_response_search(const GameConfig& cfg, int player, std::size_t grid,
                                  KrausCache* cache = nullptr);

/// Lattice coordinate k of `grid` points spanning [lo, hi].
double lattice_value(double lo, double hi, std::size_t k, std::size_t grid);

}  // namespace qminority
