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

#include "qminority/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

namespace qminority {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 5> kCoarseGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

double parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ValidationCheck make_check(std::string name, double residual, double tolerance,
                           std::string detail, bool at_most = false) {
  const bool ok = at_most ? residual <= tolerance : residual < tolerance;
  return {std::move(name), residual, tolerance, ok, std::move(detail)};
}

std::vector<DensityMatrix> probe_states() {
  const auto ground = DensityMatrix::basis_state(0);
  const auto ghz = conjugate(ground, entangler(kPi / 2));
  GameConfig cfg = GameConfig::at_equilibrium(ChannelKind::PhaseFlip, 0.0, 0.0, kPi / 2);
  const auto moved = game_stages(cfg)[3];
  const DensityMatrix blend(0.5 * moved.matrix() + 0.5 * DensityMatrix::maximally_mixed().matrix());
  return {ground, ghz, moved, blend};
}

ValidationCheck check_completeness(bool inject) {
  double worst = 0.0;
  std::string where = "all channels";
  for (auto kind : kAllChannels) {
    for (double p : kCoarseGrid) {
      for (double mu : kCoarseGrid) {
        KrausSet ks = build_channel({kind, p, mu});
        if (inject && kind == ChannelKind::Depolarizing && p == 0.5 && mu == 0.5) {
          std::vector<Operator16> ops(ks.begin(), ks.end());
          ops.front() *= std::sqrt(0.5);
          ks = KrausSet(std::move(ops));
        }
        if (ks.completeness_residual() > worst) {
          worst = ks.completeness_residual();
          where = std::string(channel_token(kind)) + " p=" + format_double(p) +
                  " mu=" + format_double(mu);
        }
      }
    }
  }
  return make_check("completeness", worst, tol::kChannel, "worst at " + where);
}

std::array<ValidationCheck, 2> check_trace_and_positivity() {
  const auto states = probe_states();
  double trace_worst = 0.0;
  double eig_worst = 0.0;
  for (auto kind : kAllChannels) {
    for (double p : kCoarseGrid) {
      for (double mu : kCoarseGrid) {
        const KrausSet ks = build_channel({kind, p, mu});
        for (const auto& rho : states) {
          const auto out = apply_kraus(rho, ks);
          const auto report = validate_density(out);
          trace_worst = std::max(trace_worst, report.trace_residual);
          eig_worst = std::max(eig_worst, -report.min_eigenvalue);
        }
      }
    }
  }
  return {make_check("trace-preservation", trace_worst, tol::kChannel,
                     "max |tr(out) - 1| over 5 channels x 25 (p, mu) x 4 probe states"),
          make_check("positivity", eig_worst, tol::kMinEigenvalue,
                     "max(-min eigenvalue) of channel outputs", true)};
}

ValidationCheck check_noiseless_equality() {
  const std::array<std::array<StrategyTriple, 4>, 3> profiles = {{
      {ne_strategy(), ne_strategy(), ne_strategy(), ne_strategy()},
      {StrategyTriple{0, 0, 0}, StrategyTriple{kPi, 0, 0}, StrategyTriple{0, 0, 0},
       StrategyTriple{kPi / 3, 0.4, -1.1}},
      {StrategyTriple{0.7, -2.0, 0.3}, StrategyTriple{2.2, 1.0, 1.5}, ne_strategy(),
       StrategyTriple{1.3, -0.2, -2.8}},
  }};
  double worst = 0.0;
  for (const auto& profile : profiles) {
    for (double mu : kCoarseGrid) {
      GameConfig cfg;
      cfg.strategies = profile;
      std::optional<PayoffVector> reference;
      for (auto kind : kAllChannels) {
        cfg.noise_pre = cfg.noise_post = ChannelSpec{kind, 0.0, mu};
        const auto payoffs = run_game(cfg).payoffs;
        if (!reference) reference = payoffs;
        for (int k = 0; k < kPlayers; ++k) {
          worst = std::max(worst, std::abs(payoffs[k] - (*reference)[k]));
        }
      }
    }
  }
  return make_check("noiseless-equality", worst, tol::kAlgebraic,
                    "max payoff spread across channels at p=0");
}

ValidationCheck check_phase_flip_symmetry(KrausCache& cache) {
  double worst = 0.0;
  for (double mu : kCoarseGrid) {
    for (std::size_t k = 0; k < 11; ++k) {
      const double p = lattice_value(0.0, 1.0, k, 11);
      const double q = lattice_value(0.0, 1.0, 10 - k, 11);
      const auto a =
          run_game(GameConfig::at_equilibrium(ChannelKind::PhaseFlip, p, mu, kPi / 2), &cache);
      const auto b =
          run_game(GameConfig::at_equilibrium(ChannelKind::PhaseFlip, q, mu, kPi / 2), &cache);
      for (int j = 0; j < kPlayers; ++j) {
        worst = std::max(worst, std::abs(a.payoffs[j] - b.payoffs[j]));
      }
    }
  }
  return make_check("phase-flip-symmetry", worst, tol::kChannel,
                    "max |payoff(p) - payoff(1-p)|, 5 mu x 11 p, gamma=pi/2");
}

ValidationCheck check_payoff_bounds(KrausCache& cache) {
  double worst = 0.0;
  for (auto kind : kAllChannels) {
    for (double p : kCoarseGrid) {
      for (double mu : kCoarseGrid) {
        for (double gamma : {0.0, kPi / 4, kPi / 2}) {
          const auto payoffs =
              run_game(GameConfig::at_equilibrium(kind, p, mu, gamma), &cache).payoffs;
          double sum = 0.0;
          for (double v : payoffs) {
            worst = std::max({worst, -v, v - 1.0});
            sum += v;
          }
          worst = std::max(worst, sum - 1.0);
        }
      }
    }
  }
  return make_check("payoff-bounds", worst, tol::kChannel,
                    "max violation of 0 <= payoff <= 1 and sum <= 1", true);
}

ValidationCheck check_ne_deviation(std::size_t grid) {
  const auto cfg = GameConfig::at_equilibrium(ChannelKind::PhaseFlip, 0.0, 0.0, kPi / 2);
  const auto best = best_response_search(cfg, 1, grid);
  const double ne = run_game(cfg).payoffs[0];
  const double gain = best.payoff - ne;
  return make_check("ne-deviation", gain, 1e-6,
                    "best lattice deviation gain, grid " + std::to_string(grid) +
                        "^3, noiseless, gamma=pi/2",
                    true);
}

ValidationCheck check_phase_flip_formula(KrausCache& cache) {
  const auto report = compare(FormulaId::PF, 11, 5, kPi / 2, &cache);
  return make_check("phase-flip-closed-form", report.max_diff, report.tolerance,
                    "max |closed form - simulation|, 11 p x 5 mu");
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view token) {
  if (token == "csv") return OutputFormat::Csv;
  if (token == "json") return OutputFormat::Json;
  return std::nullopt;
}

double parse_angle(std::string_view text) {
  static const std::regex pi_form(R"(^\s*([+-]?)(?:([0-9.eE+-]+)\*?)?pi(?:/([0-9.eE+-]+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= parse_real(m[2].str());
    if (m[3].matched) {
      const double den = parse_real(m[3].str());
      if (den == 0.0) throw std::invalid_argument("angle divides by zero: '" + s + "'");
      v /= den;
    }
    return m[1].str() == "-" ? -v : v;
  }
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty angle");
  return parse_real(s.substr(first, last - first + 1));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_sweep(const SweepRequest& req, KrausCache* cache) {
  const auto curve = payoff_curve(req.kind, req.axis, req.fixed, req.points, cache);
  const std::string channel(channel_token(req.kind));

  if (req.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& pt : curve) {
      for (int k = 0; k < kPlayers; ++k) {
        rows.push_back({{"channel", channel},
                        {"p", pt.p},
                        {"mu", pt.mu},
                        {"gamma", pt.gamma},
                        {"player", k + 1},
                        {"payoff", pt.payoffs[k]}});
      }
    }
    return dump(rows);
  }

  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& pt : curve) {
    for (int k = 0; k < kPlayers; ++k) {
      out += channel + ',' + format_double(pt.p) + ',' + format_double(pt.mu) + ',' +
             format_double(pt.gamma) + ',' + std::to_string(k + 1) + ',' +
             format_double(pt.payoffs[k]) + '\n';
    }
  }
  return out;
}

std::vector<FigureSweep> figure_sweeps() {
  std::vector<FigureSweep> figs;
  int n = 1;
  for (double mu : {0.0, 0.3, 0.7, 1.0}) {
    figs.push_back({"fig" + std::to_string(n++), SweepAxis::P, {0.0, mu, kPi / 2}});
  }
  for (double p : {0.3, 0.7}) {
    figs.push_back({"fig" + std::to_string(n++), SweepAxis::Mu, {p, 0.0, kPi / 2}});
  }
  figs.push_back({"fig" + std::to_string(n++), SweepAxis::Gamma, {0.3, 0.3, kPi / 2}});
  return figs;
}

ValidationSummary run_validation(const ValidationOptions& options) {
  KrausCache cache;
  ValidationSummary summary;
  summary.checks.push_back(check_completeness(options.inject_incomplete_channel));
  for (auto& c : check_trace_and_positivity()) summary.checks.push_back(std::move(c));
  summary.checks.push_back(check_noiseless_equality());
  summary.checks.push_back(check_phase_flip_symmetry(cache));
  summary.checks.push_back(check_payoff_bounds(cache));
  summary.checks.push_back(check_phase_flip_formula(cache));
  summary.checks.push_back(check_ne_deviation(options.ne_grid));
  return summary;
}

bool ValidationSummary::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationSummary::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-24s residual %.3e  tolerance %.1e  %s\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.residual, c.tolerance,
                  c.detail.c_str());
    os << line;
  }
  os << (passed() ? "all checks passed\n" : "validation FAILED\n");
  return os.str();
}

std::string render_compare(const DiscrepancyReport& report, OutputFormat format) {
  const std::string formula(formula_token(report.formula));
  if (format == OutputFormat::Json) {
    const auto to_json = [](const DiscrepancyPoint& pt) {
      return json{{"p", pt.p},
                  {"mu", pt.mu},
                  {"gamma", pt.gamma},
                  {"formula_value", pt.formula_value},
                  {"simulated_value", pt.simulated_value},
                  {"abs_diff", pt.abs_diff}};
    };
    json points = json::array();
    for (const auto& pt : report.points) points.push_back(to_json(pt));
    json anchors = json::array();
    for (const auto& pt : report.anchors) anchors.push_back(to_json(pt));
    return dump({{"formula", formula},
                 {"p_points", report.p_points},
                 {"mu_points", report.mu_points},
                 {"gamma", report.gamma},
                 {"tolerance", report.tolerance},
                 {"max_diff", report.max_diff},
                 {"verdict", report.consistent ? "consistent" : "inconsistent"},
                 {"points", points},
                 {"anchors", anchors}});
  }

  std::string out = "formula,kind,p,mu,gamma,formula_value,simulated_value,abs_diff\n";
  const auto row = [&](std::string_view kind, const DiscrepancyPoint& pt) {
    out += formula + ',' + std::string(kind) + ',' + format_double(pt.p) + ',' +
           format_double(pt.mu) + ',' + format_double(pt.gamma) + ',' +
           format_double(pt.formula_value) + ',' + format_double(pt.simulated_value) + ',' +
           format_double(pt.abs_diff) + '\n';
  };
  for (const auto& pt : report.points) row("grid", pt);
  for (const auto& pt : report.anchors) row("anchor", pt);
  return out;
}

std::string render_overlap(const OverlapReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json points = json::array();
    for (const auto& pt : report.points) {
      points.push_back({{"p", pt.p},
                        {"depolarizing", pt.depolarizing},
                        {"bit_phase_flip", pt.bit_phase_flip},
                        {"abs_diff", pt.abs_diff}});
    }
    return dump({{"mu", 1.0}, {"gamma", report.gamma}, {"max_diff", report.max_diff},
                 {"points", points}});
  }
  std::string out = "p,depolarizing,bit_phase_flip,abs_diff\n";
  for (const auto& pt : report.points) {
    out += format_double(pt.p) + ',' + format_double(pt.depolarizing) + ',' +
           format_double(pt.bit_phase_flip) + ',' + format_double(pt.abs_diff) + '\n';
  }
  return out;
}

std::string render_best_response(const BestResponse& best, double ne_payoff) {
  return dump({{"theta", best.strategy.theta},
               {"alpha", best.strategy.alpha},
               {"beta", best.strategy.beta},
               {"payoff", best.payoff},
               {"ne_payoff", ne_payoff}});
}

std::string render_payoff(const GameConfig& cfg, const PayoffVector& payoffs) {
  return dump({{"channel", std::string(channel_token(cfg.noise_pre.kind))},
               {"p", cfg.noise_pre.p},
               {"mu", cfg.noise_pre.mu},
               {"p_post", cfg.noise_post.p},
               {"mu_post", cfg.noise_post.mu},
               {"gamma", cfg.gamma},
               {"payoff_1", payoffs[0]},
               {"payoff_2", payoffs[1]},
               {"payoff_3", payoffs[2]},
               {"payoff_4", payoffs[3]}});
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace qminority
