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

#include "qminority/protocol.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "parallel.hpp"

namespace qminority {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeSlack = 1e-12;

void require_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo - kRangeSlack && v <= hi + kRangeSlack)) {
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(v) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::shared_ptr<const KrausSet> channel_for(const ChannelSpec& spec, KrausCache* cache) {
  if (cache != nullptr) return cache->get(spec);
  return std::make_shared<const KrausSet>(build_channel(spec));
}

Operator16 moves_operator(const std::array<StrategyTriple, kPlayers>& strategies) {
  std::array<ComplexMatrix, kPlayers> factors;
  for (int k = 0; k < kPlayers; ++k) factors[k] = strategy_unitary(strategies[k]);
  return to_operator16(tensor_all(factors));
}

}  // namespace

void StrategyTriple::validate() const {
  require_range(theta, 0.0, kPi, "theta");
  require_range(alpha, -kPi, kPi, "alpha");
  require_range(beta, -kPi, kPi, "beta");
}

GameConfig GameConfig::at_equilibrium(ChannelKind kind, double p, double mu, double gamma) {
  GameConfig cfg;
  cfg.gamma = gamma;
  cfg.noise_pre = ChannelSpec{kind, p, mu};
  cfg.noise_post = cfg.noise_pre;
  cfg.strategies.fill(ne_strategy());
  return cfg;
}

void GameConfig::validate() const {
  require_range(gamma, 0.0, kPi / 2, "gamma");
  noise_pre.validate();
  noise_post.validate();
  if (noise_pre.kind != noise_post.kind) {
    throw std::invalid_argument("GameConfig: both noise stages must use the same channel kind");
  }
  for (const auto& s : strategies) s.validate();
}

Operator16 entangler(double gamma) {
  require_range(gamma, 0.0, kPi / 2, "gamma");
  const std::array<ComplexMatrix, kPlayers> xs = {pauli(1), pauli(1), pauli(1), pauli(1)};
  const Operator16 flip = to_operator16(tensor_all(xs));
  return std::cos(gamma / 2) * Operator16::Identity() +
         Complex{0.0, std::sin(gamma / 2)} * flip;
}

ComplexMatrix strategy_unitary(const StrategyTriple& s) {
  s.validate();
  const Complex i{0.0, 1.0};
  const double c = std::cos(s.theta / 2);
  const double sn = std::sin(s.theta / 2);
  ComplexMatrix m(2, 2);
  m << std::exp(i * s.alpha) * c, i * std::exp(i * s.beta) * sn,
      i * std::exp(-i * s.beta) * sn, std::exp(-i * s.alpha) * c;
  return m;
}

StrategyTriple ne_strategy() { return {kPi / 2, -kPi / 16, kPi / 16}; }

int minority_payoff(unsigned outcome, int player) {
  if (player < 1 || player > kPlayers) {
    throw std::invalid_argument("minority_payoff: player " + std::to_string(player) +
                                " outside 1..4");
  }
  if (outcome >= static_cast<unsigned>(kDim)) {
    throw std::invalid_argument("minority_payoff: outcome outside 4 bits");
  }
  const auto bit = [outcome](int k) { return (outcome >> (kPlayers - k)) & 1u; };
  const unsigned mine = bit(player);
  for (int k = 1; k <= kPlayers; ++k) {
    if (k != player && bit(k) == mine) return 0;
  }
  return 1;
}

PayoffVector expected_payoffs(const DensityMatrix& rho) {
  PayoffVector out{};
  for (unsigned xi = 0; xi < static_cast<unsigned>(kDim); ++xi) {
    const double prob = rho.population(static_cast<int>(xi));
    for (int k = 1; k <= kPlayers; ++k) {
      if (minority_payoff(xi, k) != 0) out[k - 1] += prob;
    }
  }
  return out;
}

std::array<DensityMatrix, 6> game_stages(const GameConfig& cfg, KrausCache* cache) {
  cfg.validate();
  const Operator16 j = entangler(cfg.gamma);
  const auto pre = channel_for(cfg.noise_pre, cache);
  const auto post =
      cfg.noise_post == cfg.noise_pre ? pre : channel_for(cfg.noise_post, cache);

  std::array<DensityMatrix, 6> rho;
  rho[0] = DensityMatrix::basis_state(0);
  rho[1] = conjugate(rho[0], j);
  rho[2] = apply_kraus(rho[1], *pre);
  rho[3] = conjugate(rho[2], moves_operator(cfg.strategies));
  rho[4] = apply_kraus(rho[3], *post);
  rho[5] = conjugate(rho[4], j.adjoint());
  return rho;
}

GameResult run_game(const GameConfig& cfg, KrausCache* cache) {
  auto stages = game_stages(cfg, cache);
  const DensityMatrix& final_state = stages[5];
  if (const auto report = validate_density(final_state); !report.passed) {
    throw ContractViolation("run_game: final state invalid: " + report.describe());
  }
  return {final_state, expected_payoffs(final_state)};
}

std::string_view axis_token(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::P: return "p";
    case SweepAxis::Mu: return "mu";
    case SweepAxis::Gamma: return "gamma";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view token) {
  for (auto axis : {SweepAxis::P, SweepAxis::Mu, SweepAxis::Gamma}) {
    if (axis_token(axis) == token) return axis;
  }
  return std::nullopt;
}

double lattice_value(double lo, double hi, std::size_t k, std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("lattice needs at least 2 points");
  if (k + 1 == grid) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
}

std::vector<CurvePoint> payoff_curve(ChannelKind kind, SweepAxis axis, const CurveFixed& fixed,
                                     std::size_t points, KrausCache* cache) {
  if (points < 2) throw std::invalid_argument("payoff_curve: points must be >= 2");

  KrausCache local;
  KrausCache* shared = cache != nullptr ? cache : &local;

  std::vector<CurvePoint> curve(points);
  for (std::size_t k = 0; k < points; ++k) {
    CurvePoint& pt = curve[k];
    pt.p = fixed.p;
    pt.mu = fixed.mu;
    pt.gamma = fixed.gamma;
    switch (axis) {
      case SweepAxis::P: pt.abscissa = pt.p = lattice_value(0.0, 1.0, k, points); break;
      case SweepAxis::Mu: pt.abscissa = pt.mu = lattice_value(0.0, 1.0, k, points); break;
      case SweepAxis::Gamma:
        pt.abscissa = pt.gamma = lattice_value(0.0, kPi / 2, k, points);
        break;
    }
  }
  detail::parallel_for(points, [&](std::size_t k) {
    CurvePoint& pt = curve[k];
    pt.payoffs = run_game(GameConfig::at_equilibrium(kind, pt.p, pt.mu, pt.gamma), shared).payoffs;
  });
  return curve;
}

BestResponse best_response_search(const GameConfig& cfg, int player, std::size_t grid,
                                  KrausCache* cache) {
  if (player < 1 || player > kPlayers) {
    throw std::invalid_argument("best_response_search: player outside 1..4");
  }
  if (grid < 2) throw std::invalid_argument("best_response_search: grid must be >= 2");
  cfg.validate();

  KrausCache local;
  KrausCache* shared = cache != nullptr ? cache : &local;
  // Warm the cache once so workers only read.
  shared->get(cfg.noise_pre);
  shared->get(cfg.noise_post);

  // One slab per theta index; each slab keeps its first maximum in lattice order.
  std::vector<BestResponse> slabs(grid);
  detail::parallel_for(grid, [&](std::size_t ti) {
    GameConfig trial = cfg;
    BestResponse best{{}, -1.0};
    const double theta = lattice_value(0.0, kPi, ti, grid);
    for (std::size_t ai = 0; ai < grid; ++ai) {
      for (std::size_t bi = 0; bi < grid; ++bi) {
        const StrategyTriple s{theta, lattice_value(-kPi, kPi, ai, grid),
                               lattice_value(-kPi, kPi, bi, grid)};
        trial.strategies[player - 1] = s;
        const double v = run_game(trial, shared).payoffs[player - 1];
        if (v > best.payoff) best = {s, v};
      }
    }
    slabs[ti] = best;
  });

  BestResponse best = slabs.front();
  for (const auto& slab : slabs) {
    if (slab.payoff > best.payoff) best = slab;
  }
  return best;
}

}  // namespace qminority
