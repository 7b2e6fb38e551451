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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qminority/protocol.hpp"
#include "qminority/reference_formulas.hpp"

namespace qminority {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view token);

/// Radians, or a multiple of pi: "pi", "pi/2", "-pi/16", "3*pi/4", "0.5*pi".
/// Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

/// 17 significant digits, so every double round-trips.
std::string format_double(double v);

inline constexpr std::string_view kSweepCsvHeader = "channel,p,mu,gamma,player,payoff";

struct SweepRequest {
  ChannelKind kind = ChannelKind::PhaseFlip;
  SweepAxis axis = SweepAxis::P;
  CurveFixed fixed;
  std::size_t points = 101;
  OutputFormat format = OutputFormat::Csv;
};

/// One row per (grid point, player), grid order then player order.
std::string render_sweep(const SweepRequest& req, KrausCache* cache = nullptr);

struct FigureSweep {
  std::string name;
  SweepAxis axis = SweepAxis::P;
  CurveFixed fixed;
};

/// The seven standard sweep parameterizations: mu in {0, 0.3, 0.7, 1}
/// against p, p in {0.3, 0.7} against mu, and gamma at p = mu = 0.3.
std::vector<FigureSweep> figure_sweeps();

struct ValidationCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  /// Test hook: halves the weight of one Kraus operator before the
  /// completeness check.
  bool inject_incomplete_channel = false;
  std::size_t ne_grid = 17;
};

struct ValidationSummary {
  std::vector<ValidationCheck> checks;

  bool passed() const;
  std::string render() const;
};

ValidationSummary run_validation(const ValidationOptions& options = {});

std::string render_compare(const DiscrepancyReport& report, OutputFormat format);
std::string render_overlap(const OverlapReport& report, OutputFormat format);

/// {"theta", "alpha", "beta", "payoff", "ne_payoff"}
std::string render_best_response(const BestResponse& best, double ne_payoff);

std::string render_payoff(const GameConfig& cfg, const PayoffVector& payoffs);

/// Writes through a temporary sibling file and renames it into place, so a
/// failed write never leaves partial output. Throws std::runtime_error.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace qminority
