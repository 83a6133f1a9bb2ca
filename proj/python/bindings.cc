// Copyright 2026 The brokergraph Authors
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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brokergraph/experiment.h"
#include "brokergraph/graph.h"
#include "brokergraph/planner.h"
#include "brokergraph/protocol.h"
#include "brokergraph/simulator.h"
#include "brokergraph/tableau.h"
#include "brokergraph/timing.h"
#include "brokergraph/validation.h"

namespace py = pybind11;
using namespace brokergraph;

namespace {

py::dict summary_dict(const SummaryStats &s) {
    py::dict d;
    d["count"] = s.count;
    d["mean"] = s.mean;
    d["stddev"] = s.stddev;
    d["stderr"] = s.std_error;
    d["min"] = s.min;
    d["max"] = s.max;
    return d;
}

py::dict monte_carlo_dict(const MonteCarloResult &r) {
    py::dict d;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["time"] = summary_dict(r.time);
    d["build_time"] = summary_dict(r.build_time);
    d["attempts"] = summary_dict(r.attempts);
    d["star_stage1_rounds"] = summary_dict(r.star_stage1_rounds);
    d["star_repetitions"] = summary_dict(r.star_repetitions);
    d["verified_fraction"] = r.verified_fraction;
    return d;
}

MonteCarloOptions mc_options(ParallelMode mode, size_t workers) {
    MonteCarloOptions o;
    o.trial.parallel_mode = mode;
    o.workers = workers;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Brokered graph-state growth: stabilizer engine, protocol and timing model";

    py::enum_<Strategy>(m, "Strategy")
        .value("SEQUENTIAL", Strategy::kSequentialBipartite)
        .value("STAR", Strategy::kMultipartiteStar);
    py::enum_<ParallelMode>(m, "ParallelMode")
        .value("EXACT", ParallelMode::kExact)
        .value("PAPER_APPROX", ParallelMode::kPaperApprox);

    py::class_<TimingProfile>(m, "TimingProfile")
        .def(py::init([](Nanos tau_h, Nanos tau_o, Nanos tau_m, Nanos tau_cnot, Nanos tau_rf, double p) {
                 TimingProfile t{tau_h, tau_o, tau_m, tau_cnot, tau_rf, p};
                 t.validate();
                 return t;
             }),
             py::arg("tau_h"), py::arg("tau_o"), py::arg("tau_m"), py::arg("tau_cnot"), py::arg("tau_rf"),
             py::arg("p"))
        .def_readwrite("tau_h", &TimingProfile::tau_h)
        .def_readwrite("tau_o", &TimingProfile::tau_o)
        .def_readwrite("tau_m", &TimingProfile::tau_m)
        .def_readwrite("tau_cnot", &TimingProfile::tau_cnot)
        .def_readwrite("tau_rf", &TimingProfile::tau_rf)
        .def_readwrite("p", &TimingProfile::p)
        .def("__eq__", [](const TimingProfile &a, const TimingProfile &b) { return a == b; })
        .def("__repr__", [](const TimingProfile &t) {
            return "TimingProfile(tau_h=" + std::to_string(t.tau_h) + ", tau_o=" + std::to_string(t.tau_o) +
                   ", tau_m=" + std::to_string(t.tau_m) + ", tau_cnot=" + std::to_string(t.tau_cnot) +
                   ", tau_rf=" + std::to_string(t.tau_rf) + ", p=" + format_double(t.p) + ")";
        });

    m.def("preset", &preset, py::arg("name"));
    m.def("preset_names", [] {
        std::vector<std::string> names;
        for (const auto &p : presets()) names.push_back(p.name);
        return names;
    });
    m.def("expected_time_sequential", &expected_time_sequential, py::arg("profile"));
    m.def("expected_time_star", &expected_time_star, py::arg("profile"));
    m.def("threshold_ratio", &threshold_ratio, py::arg("p"));
    m.def("choose_strategy", &choose_strategy, py::arg("profile"));
    m.def("exact_parallel_pair_rounds", &exact_parallel_pair_rounds, py::arg("p"));

    py::class_<PauliString>(m, "PauliString")
        .def_static("from_string", &PauliString::from_string, py::arg("text"))
        .def("commutes", &PauliString::commutes)
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString(\"" + p.str() + "\")"; })
        .def_property_readonly("num_qubits", &PauliString::num_qubits);

    py::class_<Tableau>(m, "Tableau")
        .def_static("all_plus", [](size_t n) { return Tableau::new_state(n, Basis::kAllPlus); })
        .def_static("all_zero", [](size_t n) { return Tableau::new_state(n, Basis::kAllZero); })
        .def_static("from_stabilizers", &Tableau::from_stabilizers)
        .def_property_readonly("num_qubits", &Tableau::num_qubits)
        .def_property_readonly("stabilizers", &Tableau::stabilizers)
        .def("h", &Tableau::h)
        .def("s", &Tableau::s)
        .def("cz", &Tableau::cz)
        .def("cnot", &Tableau::cnot)
        .def("deterministic_outcome", &Tableau::deterministic_outcome)
        .def("__str__", &Tableau::str);
    m.def("groups_equal", &groups_equal);

    py::class_<AdornedGraph>(m, "Graph")
        .def(py::init<size_t>())
        .def_static("from_edges", &AdornedGraph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &AdornedGraph::num_vertices)
        .def("edges", &AdornedGraph::edges)
        .def("has_edge", &AdornedGraph::has_edge)
        .def("neighbors", &AdornedGraph::neighbors)
        .def("byproduct", [](const AdornedGraph &g, size_t v) { return g.byproduct(v).str(); })
        .def("same_graph", &AdornedGraph::same_graph)
        .def("__str__", &AdornedGraph::str);
    m.def("graph_stabilizers", &graph_stabilizers);
    m.def("extract_graph", &extract_graph);
    m.def("local_complement", &local_complement);
    m.def("lc_equivalent", &lc_equivalent);
    m.def("parse_edge_list", [](const std::string &text) { return parse_edge_list(text); });

    py::class_<BuildPlan>(m, "BuildPlan")
        .def_readonly("strategy", &BuildPlan::strategy)
        .def_property_readonly("rounds",
                               [](const BuildPlan &p) {
                                   py::list rounds;
                                   for (const auto &r : p.rounds) {
                                       py::list round;
                                       for (const auto &b : r) {
                                           round.append(py::make_tuple(
                                               b.kind == BlueprintKind::kEdge ? "edge" : "star4", b.nodes));
                                       }
                                       rounds.append(round);
                                   }
                                   return rounds;
                               })
        .def("__str__", &BuildPlan::str);
    m.def("plan_growth", [](const AdornedGraph &g, Strategy s) { return plan_growth(g, s); }, py::arg("target"),
          py::arg("strategy"));
    m.def("check_plan", &check_plan);

    m.def(
        "run_trial",
        [](const BuildPlan &plan, const TimingProfile &profile, uint64_t seed, ParallelMode mode) {
            TrialOptions o;
            o.parallel_mode = mode;
            TrialResult r = run_trial(plan, profile, seed, o);
            py::dict d;
            d["total_time"] = r.stats.total_time;
            d["attempts"] = r.stats.attempts_total;
            d["failures"] = r.stats.failures_total;
            d["verified"] = r.stats.verified;
            d["events_csv"] = event_log_to_csv(r.events);
            return d;
        },
        py::arg("plan"), py::arg("profile"), py::arg("seed"), py::arg("parallel_mode") = ParallelMode::kExact);
    m.def(
        "run_monte_carlo",
        [](const BuildPlan &plan, const TimingProfile &profile, size_t trials, uint64_t seed, ParallelMode mode,
           size_t workers) {
            MonteCarloResult r;
            {
                py::gil_scoped_release release;
                r = run_monte_carlo(plan, profile, trials, seed, mc_options(mode, workers));
            }
            return monte_carlo_dict(r);
        },
        py::arg("plan"), py::arg("profile"), py::arg("trials"), py::arg("seed"),
        py::arg("parallel_mode") = ParallelMode::kExact, py::arg("workers") = 0);
    m.def(
        "compare_strategies",
        [](const AdornedGraph &target, const TimingProfile &profile, size_t trials, uint64_t seed, ParallelMode mode,
           size_t workers) {
            StrategyComparison c;
            {
                py::gil_scoped_release release;
                c = compare_strategies(target, profile, trials, seed, mc_options(mode, workers));
            }
            py::dict d;
            d["predicted_sequential"] = c.predicted_sequential;
            d["predicted_star"] = c.predicted_star;
            d["threshold"] = c.threshold;
            d["sequential"] = monte_carlo_dict(c.sequential);
            d["star"] = monte_carlo_dict(c.star);
            d["chosen"] = c.chosen;
            d["mc_preferred"] = c.mc_preferred;
            d["plans_equal"] = c.plans_equal;
            return d;
        },
        py::arg("target"), py::arg("profile"), py::arg("trials"), py::arg("seed"),
        py::arg("parallel_mode") = ParallelMode::kExact, py::arg("workers") = 0);

    py::class_<BrokerNetwork>(m, "BrokerNetwork")
        .def(py::init<size_t, TimingProfile, uint64_t>(), py::arg("num_nodes"), py::arg("profile"), py::arg("seed"))
        .def("script_heralds", [](BrokerNetwork &n, std::vector<bool> v) { n.entropy().script_heralds(v); })
        .def("script_coins", [](BrokerNetwork &n, std::vector<bool> v) { n.entropy().script_coins(v); })
        .def("build_bell",
             [](BrokerNetwork &n, NodeId a, NodeId b) {
                 Clock c;
                 auto r = n.build_bell(a, b, c);
                 return py::make_tuple(r.fragment, r.attempts, r.elapsed);
             })
        .def("build_star4",
             [](BrokerNetwork &n, std::array<NodeId, 4> nodes, ParallelMode mode) {
                 Clock c;
                 auto r = n.build_star4(nodes, c, mode);
                 return py::make_tuple(r.fragment, r.attempts, r.elapsed);
             },
             py::arg("nodes"), py::arg("parallel_mode") = ParallelMode::kExact)
        .def("transfer_optimized",
             [](BrokerNetwork &n, FragmentId f) {
                 Clock c;
                 return n.transfer_optimized(f, c).outcomes;
             })
        .def("transfer_naive",
             [](BrokerNetwork &n, FragmentId f) {
                 Clock c;
                 return n.transfer_naive(f, c).outcomes;
             })
        .def("verify_fragment", &BrokerNetwork::verify_fragment)
        .def("verify_clients", &BrokerNetwork::verify_clients)
        .def_property_readonly("client_graph", &BrokerNetwork::client_graph);

    m.def(
        "validate",
        [](bool quick, bool corrupt_byproducts, uint64_t seed) {
            ValidationOptions o;
            o.quick = quick;
            o.corrupt_byproducts = corrupt_byproducts;
            o.seed = seed;
            std::vector<PropertyResult> results;
            {
                py::gil_scoped_release release;
                results = run_validation(o);
            }
            py::list out;
            for (const auto &r : results) out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("quick") = true, py::arg("corrupt_byproducts") = false, py::arg("seed") = 2024);

    m.def(
        "sweep_csv",
        [](std::vector<double> p_values, std::vector<double> ratios, size_t trials, uint64_t seed, Nanos tau_h) {
            SweepConfig s;
            s.p_values = std::move(p_values);
            s.ratios = std::move(ratios);
            s.trials = trials;
            s.seed = seed;
            s.tau_h = tau_h;
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_sweep(s);
            }
            return sweep_csv(rows);
        },
        py::arg("p_values"), py::arg("ratios"), py::arg("trials") = 2000, py::arg("seed") = 1,
        py::arg("tau_h") = 50);

    py::register_exception<RetryCapExceeded>(m, "RetryCapExceeded");
}
