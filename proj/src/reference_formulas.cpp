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

#include "qminority/reference_formulas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "qminority/protocol.hpp"

namespace qminority {

namespace {

// Coefficients below are kept digit for digit, grouping included, even
// where the result disagrees with the simulator.
// Factors such as (mu - 1.00002) are rounded forms of (mu - 1).

double amplitude_damping(double p, double m, double g) {
  const double bracket =
      0.125 * std::pow(p - 1, 6) +
      m * m *
          (0.125 * std::pow(p, 6) - 0.625 * std::pow(p, 5) + 1.25 * std::pow(p, 4) -
           1.25 * std::pow(p, 3) + 0.5 * p * p + 0.0 * p) +
      m * (0.0 - 0.25 * (p - 1.73898) * (p - 1) * (p - 1) * p * ((p - 1.76102) * p + 1.43762));
  return 0.125 * m * std::pow(p, 4) + bracket * std::sin(g);
}

double depolarizing(double p, double m, double g) {
  const double bracket =
      0.25 * std::pow(m - 1, 6) * std::pow(p, 8) -
      1.625 * (m - 1.23077) * (m - 0.998694) * (m * m - 2.00212 * m + 1.00212) *
          (m * m - 1.99919 * m + 0.999187) * std::pow(p, 7) +
      4.25 * (m - 1.00034) * (m - 0.999661) * (m * m - 2.41176 * m + 1.64706) *
          (m * m - 2.0 * m + 1.0) * std::pow(p, 6) -
      5.75 * (m - 1.24903) * std::pow(m - 1, 3) * (m * m - 2.25097 * m + 1.94934) *
          std::pow(p, 5) +
      4.25 * (m - 1) * (m - 1) * (m * m - 2.56538 * m + 1.72402) *
          (m * m - 1.90521 * m + 2.3884) * std::pow(p, 4) -
      1.625 * (m - 1.19251) * (m - 1) * (m * m - 2.75771 * m + 2.34443) *
          (m * m - 1.35747 * m + 3.08159) * std::pow(p, 3) +
      0.25 * (m - 2.12845) * (m - 1) * (m * m - 2.33278 * m + 2.63081) *
          (m * m - 0.538772 * m + 5.0004) * p * p +
      0.625 * (m - 1.1587) * (m * m - 1.2413 * m + 2.76171) * p +
      0.25 * std::cos(g / 2) * std::sin(g / 2);
  return bracket + 0.125;
}

// The trailing cos(g/2) sin(g/2) multiplies only the last group, the same
// way the constant 0.25 cos sin term sits in the sibling expressions.
double bit_phase_flip(double p, double m, double g) {
  const double bracket =
      -3.31371 * (m - 1.00056) * (m + 2) * ((m - 2.00035) * m + 1.00035) *
          ((m - 1.99909) * m + 0.99909) * std::pow(p, 7) +
      11.598 * (m - 0.999197) * (m + 2) * ((m - 2.0013) * m + 1.0013) *
          ((m - 1.9995) * m + 0.999503) * std::pow(p, 6) -
      15.7401 * (m - 1.20598) * (m - 1.00002) * (m - 0.682281) * (m + 1.9409) *
          ((m - 1.99998) * m + 0.999979) * std::pow(p, 5) +
      10.3553 * (m - 1.3349) * (m - 0.999989) * (m - 0.202106) * (m + 1.73701) *
          ((m - 2.00001) * m + 1.00001) * std::pow(p, 4) -
      3.31371 * (m - 1.83902) * (m - 1) * ((m - 1.69669) * m + 1.00918) *
          (m * (m + 2.03571) + 1.56825) * std::pow(p, 3) +
      0.414214 * (m - 2.62495) * (m - 1) * ((m - 1.30099) * m + 1.21191) *
          (m * (m + 2.92594) + 5.86011) * p * p +
      1.10355 * (m - 1.21443) * ((((m - 0.597899) * m + 1.71088) * p + 0.25) *
                                 std::cos(g / 2) * std::sin(g / 2));
  return bracket + 0.125;
}

double bit_flip(double p, double m, double g) {
  const double bracket =
      19.3137 * (m - 1.00066) * (m + 2) * ((m - 2.00041) * m + 1.00041) *
          ((m - 1.99894) * m + 0.998937) * std::pow(p, 7) -
      67.598 * (m - 0.999575) * (m + 2) * ((m - 2.00069) * m + 1.00069) *
          ((m - 1.99974) * m + 0.999737) * std::pow(p, 6) +
      91.7401 * (m - 0.999995) * (m + 2.00968) * ((m - 2) * m + 1) *
          ((m - 1.95705) * m + 1.09095) * std::pow(p, 5) -
      60.3553 * (m - 1.00001) * (m + 2.03676) * ((m - 1.99999) * m + 0.999994) *
          ((m - 1.83676) * m + 1.34104) * std::pow(p, 4) +
      19.3137 * (m - 1) * (m + 2.10125) * ((m - 2.05931) * m + 1.11332) *
          ((m - 1.54194) * m + 1.77849) * std::pow(p, 3) -
      2.41421 * (m - 1) * (m + 2.28298) * ((m - 2.30862) * m + 1.59107) *
          ((m - 0.974366) * m + 2.65448) * p * p +
      0.396447 * (m - 1.27686) * ((m - 3.76795) * m + 7.32329) * p +
      0.25 * std::cos(g / 2) * std::sin(g / 2);
  return bracket + 0.125;
}

double phase_flip(double p, double m, double g) {
  const double c = (m - 1) * (m - 1) * (m - 1);
  const double f = -16 * c * std::pow(p, 4) + 32 * c * std::pow(p, 3) -
                   4 * (5 * m * m * m - 14 * m * m + 15 * m - 6) * p * p +
                   4 * (m * m * m - 2 * m * m + 3 * m - 2) * p + 1;
  return (f * std::sin(g) + 1) / 8;
}

DiscrepancyPoint evaluate(FormulaId id, double p, double mu, double gamma, KrausCache* cache) {
  DiscrepancyPoint pt{p, mu, gamma, formula_payoff(id, p, mu, gamma), 0.0, 0.0};
  pt.simulated_value =
      run_game(GameConfig::at_equilibrium(channel_of(id), p, mu, gamma), cache).payoffs[0];
  pt.abs_diff = std::abs(pt.formula_value - pt.simulated_value);
  return pt;
}

}  // namespace

FormulaId formula_for(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return FormulaId::AD;
    case ChannelKind::Depolarizing: return FormulaId::Dep;
    case ChannelKind::BitPhaseFlip: return FormulaId::BPF;
    case ChannelKind::BitFlip: return FormulaId::BF;
    case ChannelKind::PhaseFlip: return FormulaId::PF;
  }
  throw std::invalid_argument("formula_for: unknown channel kind");
}

ChannelKind channel_of(FormulaId id) {
  switch (id) {
    case FormulaId::AD: return ChannelKind::AmplitudeDamping;
    case FormulaId::Dep: return ChannelKind::Depolarizing;
    case FormulaId::BPF: return ChannelKind::BitPhaseFlip;
    case FormulaId::BF: return ChannelKind::BitFlip;
    case FormulaId::PF: return ChannelKind::PhaseFlip;
  }
  throw std::invalid_argument("channel_of: unknown formula id");
}

std::string_view formula_token(FormulaId id) { return channel_token(channel_of(id)); }

double formula_payoff(FormulaId id, double p, double mu, double gamma) {
  switch (id) {
    case FormulaId::AD: return amplitude_damping(p, mu, gamma);
    case FormulaId::Dep: return depolarizing(p, mu, gamma);
    case FormulaId::BPF: return bit_phase_flip(p, mu, gamma);
    case FormulaId::BF: return bit_flip(p, mu, gamma);
    case FormulaId::PF: return phase_flip(p, mu, gamma);
  }
  throw std::invalid_argument("formula_payoff: unknown formula id");
}

double formula_tolerance(FormulaId id) { return id == FormulaId::PF ? 1e-10 : 5e-3; }

DiscrepancyReport compare(FormulaId id, std::size_t p_points, std::size_t mu_points, double gamma,
                          KrausCache* cache) {
  if (p_points < 2 || mu_points < 2) {
    throw std::invalid_argument("compare: grid sizes must be >= 2");
  }
  KrausCache local;
  KrausCache* shared = cache != nullptr ? cache : &local;

  DiscrepancyReport report;
  report.formula = id;
  report.p_points = p_points;
  report.mu_points = mu_points;
  report.gamma = gamma;
  report.tolerance = formula_tolerance(id);
  report.points.resize(p_points * mu_points);

  detail::parallel_for(report.points.size(), [&](std::size_t k) {
    const double p = lattice_value(0.0, 1.0, k / mu_points, p_points);
    const double mu = lattice_value(0.0, 1.0, k % mu_points, mu_points);
    report.points[k] = evaluate(id, p, mu, gamma, shared);
  });
  for (const auto& [p, mu] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}) {
    report.anchors.push_back(evaluate(id, p, mu, gamma, shared));
  }

  for (const auto& pt : report.points) report.max_diff = std::max(report.max_diff, pt.abs_diff);
  report.consistent = report.max_diff < report.tolerance;
  return report;
}

OverlapReport overlap_check(double gamma, std::size_t p_points, KrausCache* cache) {
  if (p_points < 2) throw std::invalid_argument("overlap_check: p_points must be >= 2");
  KrausCache local;
  KrausCache* shared = cache != nullptr ? cache : &local;

  OverlapReport report;
  report.gamma = gamma;
  report.points.resize(p_points);
  detail::parallel_for(p_points, [&](std::size_t k) {
    OverlapPoint& pt = report.points[k];
    pt.p = lattice_value(0.0, 1.0, k, p_points);
    pt.depolarizing =
        run_game(GameConfig::at_equilibrium(ChannelKind::Depolarizing, pt.p, 1.0, gamma), shared)
            .payoffs[0];
    pt.bit_phase_flip =
        run_game(GameConfig::at_equilibrium(ChannelKind::BitPhaseFlip, pt.p, 1.0, gamma), shared)
            .payoffs[0];
    pt.abs_diff = std::abs(pt.depolarizing - pt.bit_phase_flip);
  });
  for (const auto& pt : report.points) report.max_diff = std::max(report.max_diff, pt.abs_diff);
  return report;
}

}  // namespace qminority
