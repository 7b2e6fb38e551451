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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qminority/channels.hpp"
#include "qminority/protocol.hpp"
#include "qminority/reference_formulas.hpp"

namespace py = pybind11;
using namespace qminority;

namespace {

py::dict point_dict(const DiscrepancyPoint& pt) {
  py::dict d;
  d["p"] = pt.p;
  d["mu"] = pt.mu;
  d["gamma"] = pt.gamma;
  d["formula_value"] = pt.formula_value;
  d["simulated_value"] = pt.simulated_value;
  d["abs_diff"] = pt.abs_diff;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noisy four-player quantum Minority game simulator";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ChannelConstructionError>(m, "ChannelConstructionError",
                                                   PyExc_RuntimeError);

  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("AmplitudeDamping", ChannelKind::AmplitudeDamping)
      .value("Depolarizing", ChannelKind::Depolarizing)
      .value("BitFlip", ChannelKind::BitFlip)
      .value("PhaseFlip", ChannelKind::PhaseFlip)
      .value("BitPhaseFlip", ChannelKind::BitPhaseFlip);

  py::enum_<FormulaId>(m, "FormulaId")
      .value("AD", FormulaId::AD)
      .value("Dep", FormulaId::Dep)
      .value("BPF", FormulaId::BPF)
      .value("BF", FormulaId::BF)
      .value("PF", FormulaId::PF);

  py::class_<ChannelSpec>(m, "ChannelSpec")
      .def(py::init([](ChannelKind kind, double p, double mu) {
             ChannelSpec s{kind, p, mu};
             s.validate();
             return s;
           }),
           py::arg("kind"), py::arg("p") = 0.0, py::arg("mu") = 0.0)
      .def_readwrite("kind", &ChannelSpec::kind)
      .def_readwrite("p", &ChannelSpec::p)
      .def_readwrite("mu", &ChannelSpec::mu);

  py::class_<StrategyTriple>(m, "StrategyTriple")
      .def(py::init<double, double, double>(), py::arg("theta") = 0.0, py::arg("alpha") = 0.0,
           py::arg("beta") = 0.0)
      .def_readwrite("theta", &StrategyTriple::theta)
      .def_readwrite("alpha", &StrategyTriple::alpha)
      .def_readwrite("beta", &StrategyTriple::beta)
      .def("__repr__", [](const StrategyTriple& s) {
        return "StrategyTriple(" + std::to_string(s.theta) + ", " + std::to_string(s.alpha) +
               ", " + std::to_string(s.beta) + ")";
      });

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init<>())
      .def_static("at_equilibrium", &GameConfig::at_equilibrium, py::arg("kind"), py::arg("p"),
                  py::arg("mu"), py::arg("gamma"))
      .def_readwrite("gamma", &GameConfig::gamma)
      .def_readwrite("noise_pre", &GameConfig::noise_pre)
      .def_readwrite("noise_post", &GameConfig::noise_post)
      .def_readwrite("strategies", &GameConfig::strategies);

  m.def("pauli", &pauli, py::arg("index"));
  m.def("entangler", &entangler, py::arg("gamma"));
  m.def("strategy_unitary", &strategy_unitary, py::arg("strategy"));
  m.def("ne_strategy", &ne_strategy);
  m.def("minority_payoff", &minority_payoff, py::arg("outcome"), py::arg("player"));

  m.def(
      "build_channel",
      [](const ChannelSpec& spec) {
        const auto ks = build_channel(spec);
        return std::vector<Operator16>(ks.begin(), ks.end());
      },
      py::arg("spec"), "Kraus operators of the channel as 16x16 complex arrays.");
  m.def(
      "completeness_residual",
      [](const std::vector<Operator16>& ops) { return completeness_residual(ops); },
      py::arg("operators"));
  m.def(
      "validate_density",
      [](const Operator16& rho) {
        const auto r = validate_density(DensityMatrix(rho));
        py::dict d;
        d["hermiticity_residual"] = r.hermiticity_residual;
        d["trace_residual"] = r.trace_residual;
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["passed"] = r.passed;
        return d;
      },
      py::arg("rho"));

  m.def(
      "run_game",
      [](const GameConfig& cfg) {
        GameResult result;
        {
          py::gil_scoped_release release;
          result = run_game(cfg);
        }
        return py::make_tuple(Operator16(result.final_state.matrix()), result.payoffs);
      },
      py::arg("config"), "Returns (final density matrix, payoffs of players 1..4).");

  m.def(
      "payoff_curve",
      [](ChannelKind kind, const std::string& vary, double p, double mu, double gamma,
         std::size_t points) {
        const auto axis = parse_axis(vary);
        if (!axis) throw py::value_error("vary must be 'p', 'mu' or 'gamma'");
        std::vector<CurvePoint> curve;
        {
          py::gil_scoped_release release;
          curve = payoff_curve(kind, *axis, {p, mu, gamma}, points);
        }
        py::list out;
        for (const auto& pt : curve) out.append(py::make_tuple(pt.abscissa, pt.payoffs));
        return out;
      },
      py::arg("kind"), py::arg("vary"), py::arg("p") = 0.0, py::arg("mu") = 0.0,
      py::arg("gamma") = std::numbers::pi / 2, py::arg("points") = 101);

  m.def(
      "best_response_search",
      [](const GameConfig& cfg, int player, std::size_t grid) {
        BestResponse best;
        {
          py::gil_scoped_release release;
          best = best_response_search(cfg, player, grid);
        }
        return py::make_tuple(best.strategy, best.payoff);
      },
      py::arg("config"), py::arg("player") = 1, py::arg("grid") = 17);

  m.def("formula_payoff", &formula_payoff, py::arg("formula"), py::arg("p"), py::arg("mu"),
        py::arg("gamma"));

  m.def(
      "compare",
      [](FormulaId id, std::size_t p_points, std::size_t mu_points, double gamma) {
        DiscrepancyReport report;
        {
          py::gil_scoped_release release;
          report = compare(id, p_points, mu_points, gamma);
        }
        py::dict d;
        d["formula"] = std::string(formula_token(report.formula));
        d["tolerance"] = report.tolerance;
        d["max_diff"] = report.max_diff;
        d["consistent"] = report.consistent;
        py::list points;
        for (const auto& pt : report.points) points.append(point_dict(pt));
        d["points"] = points;
        py::list anchors;
        for (const auto& pt : report.anchors) anchors.append(point_dict(pt));
        d["anchors"] = anchors;
        return d;
      },
      py::arg("formula"), py::arg("p_points") = 11, py::arg("mu_points") = 5,
      py::arg("gamma") = std::numbers::pi / 2);

  m.def(
      "overlap_check",
      [](double gamma, std::size_t p_points) {
        OverlapReport report;
        {
          py::gil_scoped_release release;
          report = overlap_check(gamma, p_points);
        }
        py::dict d;
        d["gamma"] = report.gamma;
        d["max_diff"] = report.max_diff;
        py::list points;
        for (const auto& pt : report.points) {
          points.append(py::make_tuple(pt.p, pt.depolarizing, pt.bit_phase_flip, pt.abs_diff));
        }
        d["points"] = points;
        return d;
      },
      py::arg("gamma") = std::numbers::pi / 2, py::arg("p_points") = 101);
}
