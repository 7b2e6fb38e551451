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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qminority/channels.hpp"

namespace qminority {

/// Published closed-form expressions for player 1's equilibrium payoff, one
/// per channel kind.
enum class FormulaId { AD, Dep, BPF, BF, PF };

FormulaId formula_for(ChannelKind kind);
ChannelKind channel_of(FormulaId id);
std::string_view formula_token(FormulaId id);

/// Evaluates the reference polynomial exactly as given, decimal
/// coefficients included. The AD, Dep, BPF and BF expressions carry known
/// defects (see README); nothing is corrected here.
double formula_payoff(FormulaId id, double p, double mu, double gamma);

/// Agreement threshold used by compare(): 1e-10 for PF (exact rational
/// coefficients), 5e-3 otherwise (coefficients carry six digits).
double formula_tolerance(FormulaId id);

struct DiscrepancyPoint {
  double p = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  double formula_value = 0.0;
  double simulated_value = 0.0;
  double abs_diff = 0.0;
};

struct DiscrepancyReport {
  FormulaId formula = FormulaId::PF;
  std::size_t p_points = 0;
  std::size_t mu_points = 0;
  double gamma = 0.0;
  double tolerance = 0.0;
  /// p-major, then mu.
  std::vector<DiscrepancyPoint> points;
  /// The (p, mu) corners {0,1}^2 at the same gamma, always evaluated.
  std::vector<DiscrepancyPoint> anchors;
  double max_diff = 0.0;
  bool consistent = false;
};

DiscrepancyReport compare(FormulaId id, std::size_t p_points, std::size_t mu_points, double gamma,
                          KrausCache* cache = nullptr);

struct OverlapPoint {
  double p = 0.0;
  double depolarizing = 0.0;
  double bit_phase_flip = 0.0;
  double abs_diff = 0.0;
};

/// Simulated player-1 payoffs of the depolarizing and bit-phase-flip channels
/// at mu = 1 over a uniform p-grid. Reports only; asserts nothing.
struct OverlapReport {
  double gamma = 0.0;
  std::vector<OverlapPoint> points;
  double max_diff = 0.0;
};

OverlapReport overlap_check(double gamma, std::size_t p_points, KrausCache* cache = nullptr);

}  // namespace qminority
