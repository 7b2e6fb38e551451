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

#include "qminority/cli.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qminority/sweeps.hpp"

namespace qminority {

namespace {

const std::map<std::string, ChannelKind> kChannelMap = {
    {"ad", ChannelKind::AmplitudeDamping}, {"dep", ChannelKind::Depolarizing},
    {"bf", ChannelKind::BitFlip},          {"pf", ChannelKind::PhaseFlip},
    {"bpf", ChannelKind::BitPhaseFlip}};

const std::map<std::string, SweepAxis> kAxisMap = {
    {"p", SweepAxis::P}, {"mu", SweepAxis::Mu}, {"gamma", SweepAxis::Gamma}};

const std::map<std::string, OutputFormat> kFormatMap = {{"csv", OutputFormat::Csv},
                                                        {"json", OutputFormat::Json}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StrategyTriple parse_triple(const std::string& text) {
  if (text == "ne") return ne_strategy();
  std::vector<double> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(parse_angle(item));
  if (parts.size() != 3) {
    throw UsageError("strategy '" + text + "' is not 'ne' or 'theta,alpha,beta'");
  }
  return {parts[0], parts[1], parts[2]};
}

int emit(const std::string& content, const std::string& path, std::ostream& out,
         std::ostream& err) {
  if (path.empty() || path == "-") {
    out << content;
    return kExitOk;
  }
  try {
    write_file_atomically(path, content);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

struct CommonOutput {
  std::string path;
  OutputFormat format = OutputFormat::Csv;

  void attach(CLI::App* cmd) {
    cmd->add_option("--out,-o", path, "Output file (stdout when omitted)");
    cmd->add_option("--format", format, "csv or json")
        ->transform(CLI::CheckedTransformer(kFormatMap));
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-player quantum Minority game under correlated noise channels", "qminority"};
  app.require_subcommand(1);

  // sweep
  SweepRequest sweep;
  std::string sweep_gamma = "pi/2";
  CommonOutput sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Equilibrium payoff curve over p, mu or gamma");
  sweep_cmd->add_option("--channel,-c", sweep.kind, "ad, dep, bpf, bf or pf")
      ->required()
      ->transform(CLI::CheckedTransformer(kChannelMap));
  sweep_cmd->add_option("--vary", sweep.axis, "p, mu or gamma")
      ->required()
      ->transform(CLI::CheckedTransformer(kAxisMap));
  sweep_cmd->add_option("--p", sweep.fixed.p, "Decoherence probability")
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--mu", sweep.fixed.mu, "Memory degree")->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--gamma", sweep_gamma, "Entanglement angle (radians or pi/2)");
  sweep_cmd->add_option("--points,-n", sweep.points, "Grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  sweep_out.attach(sweep_cmd);

  // validate
  ValidationOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Run the invariant validation suite");
  validate_cmd->add_option("--ne-grid", validate_opts.ne_grid, "Best-response lattice size")
      ->check(CLI::Range(std::size_t{2}, std::size_t{257}));
  validate_cmd
      ->add_flag("--inject-fault", validate_opts.inject_incomplete_channel,
                 "Halve one Kraus weight before the completeness check")
      ->group("");

  // compare
  ChannelKind compare_kind = ChannelKind::PhaseFlip;
  std::size_t p_points = 11;
  std::size_t mu_points = 5;
  std::string compare_gamma = "pi/2";
  CommonOutput compare_out;
  auto* compare_cmd =
      app.add_subcommand("compare", "Closed-form payoff polynomial against the simulator");
  compare_cmd->add_option("--channel,-c", compare_kind, "ad, dep, bpf, bf or pf")
      ->required()
      ->transform(CLI::CheckedTransformer(kChannelMap));
  compare_cmd->add_option("--p-points", p_points)->check(CLI::Range(std::size_t{2}, std::size_t{10001}));
  compare_cmd->add_option("--mu-points", mu_points)->check(CLI::Range(std::size_t{2}, std::size_t{10001}));
  compare_cmd->add_option("--gamma", compare_gamma, "Entanglement angle (radians or pi/2)");
  compare_out.attach(compare_cmd);

  // best-response
  ChannelKind br_kind = ChannelKind::PhaseFlip;
  double br_p = 0.0;
  double br_mu = 0.0;
  std::string br_gamma = "pi/2";
  std::size_t br_grid = 17;
  int br_player = 1;
  std::string br_others = "ne";
  auto* br_cmd = app.add_subcommand("best-response", "Lattice search for a profitable deviation");
  br_cmd->add_option("--channel,-c", br_kind)->transform(CLI::CheckedTransformer(kChannelMap));
  br_cmd->add_option("--p", br_p)->check(CLI::Range(0.0, 1.0));
  br_cmd->add_option("--mu", br_mu)->check(CLI::Range(0.0, 1.0));
  br_cmd->add_option("--gamma", br_gamma);
  br_cmd->add_option("--grid", br_grid, "Lattice points per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{257}));
  br_cmd->add_option("--player", br_player)->check(CLI::Range(1, 4));
  br_cmd->add_option("--others", br_others, "'ne' or 'theta,alpha,beta' for the other players");

  // payoff
  ChannelKind pay_kind = ChannelKind::PhaseFlip;
  double pay_p = 0.0;
  double pay_mu = 0.0;
  std::optional<double> pay_p_post;
  std::optional<double> pay_mu_post;
  std::string pay_gamma = "pi/2";
  std::vector<std::string> pay_strategies;
  auto* pay_cmd = app.add_subcommand("payoff", "Expected payoffs at a single point (JSON)");
  pay_cmd->add_option("--channel,-c", pay_kind)->transform(CLI::CheckedTransformer(kChannelMap));
  pay_cmd->add_option("--p", pay_p)->check(CLI::Range(0.0, 1.0));
  pay_cmd->add_option("--mu", pay_mu)->check(CLI::Range(0.0, 1.0));
  pay_cmd->add_option("--p-post", pay_p_post, "Second-stage p (defaults to --p)")
      ->check(CLI::Range(0.0, 1.0));
  pay_cmd->add_option("--mu-post", pay_mu_post, "Second-stage mu (defaults to --mu)")
      ->check(CLI::Range(0.0, 1.0));
  pay_cmd->add_option("--gamma", pay_gamma);
  pay_cmd->add_option("--strategy", pay_strategies,
                      "Per-player 'ne' or 'theta,alpha,beta'; repeat up to 4 times")
      ->expected(1, 4);

  // overlap
  std::size_t ov_points = 101;
  std::string ov_gamma = "pi/2";
  CommonOutput ov_out;
  auto* ov_cmd =
      app.add_subcommand("overlap", "Depolarizing vs bit-phase-flip payoffs at mu = 1");
  ov_cmd->add_option("--points,-n", ov_points)->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  ov_cmd->add_option("--gamma", ov_gamma);
  ov_out.attach(ov_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      sweep.fixed.gamma = parse_angle(sweep_gamma);
      sweep.format = sweep_out.format;
      return emit(render_sweep(sweep), sweep_out.path, out, err);
    }
    if (*validate_cmd) {
      const auto summary = run_validation(validate_opts);
      out << summary.render();
      return summary.passed() ? kExitOk : kExitValidationFailure;
    }
    if (*compare_cmd) {
      const auto id = formula_for(compare_kind);
      const auto report = compare(id, p_points, mu_points, parse_angle(compare_gamma));
      const int code = emit(render_compare(report, compare_out.format), compare_out.path, out, err);
      if (code != kExitOk) return code;
      err << "compare " << formula_token(id) << ": max diff " << format_double(report.max_diff)
          << " (tolerance " << format_double(report.tolerance) << ") "
          << (report.consistent ? "consistent" : "inconsistent") << '\n';
      if (id == FormulaId::PF && !report.consistent) return kExitValidationFailure;
      return kExitOk;
    }
    if (*br_cmd) {
      GameConfig cfg = GameConfig::at_equilibrium(br_kind, br_p, br_mu, parse_angle(br_gamma));
      cfg.strategies.fill(parse_triple(br_others));
      const auto best = best_response_search(cfg, br_player, br_grid);
      cfg.strategies[br_player - 1] = ne_strategy();
      const double ne_payoff = run_game(cfg).payoffs[br_player - 1];
      out << render_best_response(best, ne_payoff);
      return kExitOk;
    }
    if (*pay_cmd) {
      GameConfig cfg = GameConfig::at_equilibrium(pay_kind, pay_p, pay_mu, parse_angle(pay_gamma));
      cfg.noise_post.p = pay_p_post.value_or(pay_p);
      cfg.noise_post.mu = pay_mu_post.value_or(pay_mu);
      for (std::size_t k = 0; k < pay_strategies.size(); ++k) {
        cfg.strategies[k] = parse_triple(pay_strategies[k]);
      }
      out << render_payoff(cfg, run_game(cfg).payoffs);
      return kExitOk;
    }
    if (*ov_cmd) {
      const auto report = overlap_check(parse_angle(ov_gamma), ov_points);
      const int code = emit(render_overlap(report, ov_out.format), ov_out.path, out, err);
      if (code == kExitOk) {
        err << "overlap at mu=1: max |dep - bpf| = " << format_double(report.max_diff) << '\n';
      }
      return code;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qminority
