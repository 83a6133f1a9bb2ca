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

#include "brokergraph/validation.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "brokergraph/planner.h"
#include "brokergraph/simulator.h"
#include "brokergraph/timing.h"

namespace brokergraph {

DenseState replay_trace(size_t num_qubits, const std::vector<TraceStep> &trace) {
    DenseState psi(num_qubits, Basis::kAllPlus);
    for (const auto &step : trace) {
        switch (step.kind) {
            case TraceStep::Kind::kGate:
                psi.apply_gate(step.gate, step.a, step.b);
                break;
            case TraceStep::Kind::kProject:
                if (psi.project(step.op, step.outcome) <= 1e-12) throw std::logic_error("trace projects onto a null branch");
                break;
            case TraceStep::Kind::kReset: {
                PauliString z = PauliString::single(num_qubits, step.a, 'Z');
                if (psi.project(z, step.outcome) <= 1e-12) throw std::logic_error("trace resets through a null branch");
                if (step.outcome == -1) psi.apply_gate(Gate::kX, step.a);
                psi.apply_gate(Gate::kH, step.a);
                break;
            }
        }
    }
    return psi;
}

std::optional<std::vector<PauliString>> corrected_client_group(const BrokerNetwork &net) {
    Tableau t = net.state();
    std::vector<size_t> clients;
    for (size_t v = 0; v < net.num_nodes(); v++) {
        size_t q = net.node(v).client;
        net.client_graph().byproduct(v).inverse().apply_to(t, q);
        clients.push_back(q);
    }
    auto reduced = reduced_state(t, clients);
    if (!reduced) return std::nullopt;
    return canonical_generators(reduced->stabilizers());
}

bool dense_clients_match(const BrokerNetwork &net, const AdornedGraph &target, const Amplitudes &psi, double tol) {
    size_t n = net.state().num_qubits();
    AdornedGraph adorned = target;
    for (size_t v = 0; v < target.num_vertices(); v++) adorned.set_byproduct(v, net.client_graph().byproduct(v));
    Tableau local = graph_stabilizers(adorned);
    for (const auto &k : local.stabilizers()) {
        PauliString wide(n);
        wide.set_phase(k.phase());
        for (size_t v = 0; v < target.num_vertices(); v++) {
            size_t q = net.node(v).client;
            wide.set_x(q, k.x(v));
            wide.set_z(q, k.z(v));
        }
        Amplitudes image = apply_pauli(wide, psi);
        double diff = 0;
        for (size_t i = 0; i < psi.size(); i++) diff += std::norm(image[i] - psi[i]);
        if (std::sqrt(diff) > tol) return false;
    }
    return true;
}

namespace {

using Rng = std::mt19937_64;

PauliString random_hermitian_pauli(size_t n, Rng &rng) {
    PauliString p(n);
    do {
        for (size_t q = 0; q < n; q++) {
            p.set_x(q, rng() & 1);
            p.set_z(q, rng() & 1);
        }
    } while (p.is_identity());
    p.set_phase((rng() & 1) ? 2 : 0);
    return p;
}

struct RandomGate {
    Gate gate;
    size_t a;
    size_t b;
};

RandomGate random_gate(size_t n, Rng &rng) {
    static const Gate kGates[] = {Gate::kH, Gate::kS, Gate::kSDag, Gate::kX, Gate::kY, Gate::kZ, Gate::kCZ, Gate::kCNOT};
    Gate g = kGates[rng() % (n > 1 ? 8 : 6)];
    size_t a = rng() % n;
    size_t b = a;
    if (g == Gate::kCZ || g == Gate::kCNOT) {
        while (b == a) b = rng() % n;
    }
    return {g, a, b};
}

void apply(Tableau &t, const RandomGate &g) {
    if (g.gate == Gate::kCZ || g.gate == Gate::kCNOT) {
        t.apply_gate(g.gate, {g.a, g.b});
    } else {
        t.apply_gate(g.gate, {g.a});
    }
}

AdornedGraph random_graph(size_t n, Rng &rng, bool with_byproducts) {
    AdornedGraph g(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rng() & 1) g.add_edge(a, b);
        }
    }
    if (with_byproducts) {
        for (size_t v = 0; v < n; v++) g.set_byproduct(v, LocalClifford::all()[rng() % 24]);
    }
    return g;
}

std::string check_tableau_invariants(const ValidationOptions &o) {
    Rng rng(o.seed);
    size_t circuits = o.quick ? 40 : 300;
    for (size_t c = 0; c < circuits; c++) {
        size_t n = 1 + rng() % 10;
        Tableau t = Tableau::new_state(n, (rng() & 1) ? Basis::kAllPlus : Basis::kAllZero);
        for (size_t step = 0; step < 120; step++) {
            if (rng() % 4 == 0) {
                t.measure(random_hermitian_pauli(n, rng), rng);
            } else {
                apply(t, random_gate(n, rng));
            }
            if (auto err = t.check_invariants()) {
                return "circuit " + std::to_string(c) + " step " + std::to_string(step) + ": " + *err;
            }
        }
    }
    return {};
}

std::string check_stabilizer_vs_statevector(const ValidationOptions &o) {
    Rng rng(o.seed + 1);
    size_t circuits = o.quick ? 30 : 200;
    for (size_t c = 0; c < circuits; c++) {
        size_t n = 1 + rng() % 6;
        Basis basis = (rng() & 1) ? Basis::kAllPlus : Basis::kAllZero;
        Tableau t = Tableau::new_state(n, basis);
        DenseState d(n, basis);
        for (size_t step = 0; step < 60; step++) {
            if (rng() % 5 == 0) {
                PauliString op = random_hermitian_pauli(n, rng);
                auto forced = t.deterministic_outcome(op);
                double plus = d.probability_plus(op);
                if (forced && std::abs(plus - (*forced == 1 ? 1.0 : 0.0)) > 1e-9) {
                    return "circuit " + std::to_string(c) + ": deterministic outcome disagrees for " + op.str();
                }
                if (!forced && std::abs(plus - 0.5) > 1e-9) {
                    return "circuit " + std::to_string(c) + ": random outcome is biased for " + op.str();
                }
                int outcome = t.measure(op, rng);
                d.project(op, outcome);
            } else {
                RandomGate g = random_gate(n, rng);
                apply(t, g);
                d.apply_gate(g.gate, g.a, g.b);
            }
            if (overlap_magnitude(state_vector(t), d.amplitudes()) < 1 - 1e-9) {
                return "circuit " + std::to_string(c) + " step " + std::to_string(step) + ": states differ";
            }
        }
    }
    return {};
}

std::string check_graph_roundtrip(const ValidationOptions &o) {
    Rng rng(o.seed + 2);
    size_t cases = o.quick ? 100 : 1000;
    for (size_t c = 0; c < cases; c++) {
        size_t n = 1 + rng() % 8;
        AdornedGraph g = random_graph(n, rng, true);
        Tableau state = graph_stabilizers(g);
        if (!groups_equal(graph_stabilizers(extract_graph(state)), state)) {
            return "extract_graph loses the state of " + g.str();
        }
        size_t v = rng() % n;
        if (!groups_equal(graph_stabilizers(local_complement(g, v)), state)) {
            return "local complementation at " + std::to_string(v) + " changes the state of " + g.str();
        }
        // Scramble the frame with Clifford gates and re-extract.
        Tableau scrambled = state;
        for (size_t k = 0; k < 20; k++) apply(scrambled, random_gate(n, rng));
        if (!groups_equal(graph_stabilizers(extract_graph(scrambled)), scrambled)) {
            return "extract_graph fails on a scrambled state";
        }
    }
    return {};
}

/// Builds one fragment (forced successes), optionally preloads a client
/// graph, then transfers it with the requested circuit under a scripted
/// outcome branch.
BrokerNetwork transfer_case(size_t num_nodes, const std::vector<std::vector<NodeId>> &preload,
                            const std::vector<NodeId> &fragment, bool naive, uint64_t branch,
                            const FaultInjection &faults) {
    BrokerNetwork net(num_nodes, preset("unit_ratio10"), 7);
    net.set_fault_injection(faults);
    Clock clock;
    for (const auto &e : preload) {
        net.entropy().script_heralds({true});
        auto b = net.build_bell(e[0], e[1], clock);
        net.transfer_optimized(b.fragment, clock);
    }
    FragmentId fid;
    if (fragment.size() == 2) {
        net.entropy().script_heralds({true});
        fid = net.build_bell(fragment[0], fragment[1], clock).fragment;
    } else {
        net.entropy().script_heralds({true, true, true});
        fid = net.build_star4({fragment[0], fragment[1], fragment[2], fragment[3]}, clock).fragment;
    }
    std::vector<bool> coins;
    for (size_t k = 0; k < fragment.size(); k++) coins.push_back((branch >> k) & 1);
    net.entropy().script_coins(coins);
    if (naive) {
        net.transfer_naive(fid, clock);
    } else {
        net.transfer_optimized(fid, clock);
    }
    return net;
}

std::string check_transfer_equivalence(const ValidationOptions &o) {
    struct Case {
        const char *name;
        size_t nodes;
        std::vector<std::vector<NodeId>> preload;
        std::vector<NodeId> fragment;
        std::vector<Edge> target;
        bool naive_allowed;
    };
    const std::vector<Case> cases = {
        {"edge", 2, {}, {0, 1}, {{0, 1}}, true},
        {"star4", 4, {}, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}, true},
        {"edge onto a 2-chain", 3, {{0, 1}, {1, 2}}, {0, 2}, {{0, 1}, {1, 2}, {0, 2}}, true},
        {"star4 onto a chain", 5, {{3, 4}}, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, false},
    };
    FaultInjection faults;
    faults.drop_transfer_corrections = o.corrupt_byproducts;
    for (const auto &c : cases) {
        AdornedGraph target = AdornedGraph::from_edges(c.nodes, c.target);
        auto expected = canonical_generators(graph_stabilizers(target).stabilizers());
        for (uint64_t branch = 0; branch < (uint64_t{1} << c.fragment.size()); branch++) {
            BrokerNetwork opt = transfer_case(c.nodes, c.preload, c.fragment, false, branch, faults);
            auto opt_group = corrected_client_group(opt);
            if (!opt_group || *opt_group != expected) {
                return std::string(c.name) + ", branch " + std::to_string(branch) + ": optimized circuit disagrees";
            }
            if (!c.naive_allowed) continue;
            BrokerNetwork naive = transfer_case(c.nodes, c.preload, c.fragment, true, branch, faults);
            auto naive_group = corrected_client_group(naive);
            if (!naive_group || *naive_group != *opt_group) {
                return std::string(c.name) + ", branch " + std::to_string(branch) + ": naive and optimized differ";
            }
        }
    }
    return {};
}

std::string check_end_to_end(const ValidationOptions &o) {
    Rng rng(o.seed + 3);
    TimingProfile profile = preset("unit_ratio10");
    size_t cases = o.quick ? 20 : 120;
    TrialOptions opts;
    opts.faults.drop_transfer_corrections = o.corrupt_byproducts;
    for (size_t c = 0; c < cases; c++) {
        size_t n = 2 + rng() % 5;
        AdornedGraph g = random_graph(n, rng, false);
        if (g.num_edges() == 0) g.add_edge(0, 1);
        Strategy s = (rng() & 1) ? Strategy::kMultipartiteStar : Strategy::kSequentialBipartite;
        BuildPlan plan = plan_growth(g, s);
        std::vector<TraceStep> trace;
        TrialOptions local = opts;
        local.trace = &trace;
        bool dense_ok = true;
        local.on_finish = [&](const BrokerNetwork &net) {
            DenseState psi = replay_trace(net.state().num_qubits(), trace);
            dense_ok = overlap_magnitude(psi.amplitudes(), state_vector(net.state())) > 1 - 1e-9 &&
                       dense_clients_match(net, g, psi.amplitudes());
        };
        TrialResult r = run_trial(plan, profile, rng(), local);
        if (!r.stats.verified) return "verify_clients failed for " + g.str();
        if (!dense_ok) return "dense replay disagrees for " + g.str();
    }
    return {};
}

std::string check_insulation(const ValidationOptions &o) {
    Rng rng(o.seed + 4);
    TimingProfile profile = preset("unit_ratio10");
    profile.p = 0.1;
    size_t trials = o.quick ? 100 : 1000;
    size_t violations = 0;
    size_t events = 0;
    for (size_t t = 0; t < trials; t++) {
        size_t n = 3 + rng() % 4;
        AdornedGraph g = random_graph(n, rng, false);
        if (g.num_edges() == 0) g.add_edge(0, 1);
        BuildPlan plan = plan_growth(g, (t & 1) ? Strategy::kMultipartiteStar : Strategy::kSequentialBipartite);
        std::vector<PauliString> last = BrokerNetwork(n, profile, 0).client_snapshot();
        TrialOptions opts;
        opts.record_events = false;
        opts.parallel_mode = (t & 2) ? ParallelMode::kExact : ParallelMode::kPaperApprox;
        opts.observer = [&](const Event &e, const BrokerNetwork &net) {
            events++;
            auto snap = net.client_snapshot();
            if (snap != last && e.kind != EventKind::kTransferDone && e.kind != EventKind::kReadoutDone) violations++;
            last = std::move(snap);
        };
        run_trial(plan, profile, rng(), opts);
    }
    if (violations) return std::to_string(violations) + " client changes outside transfers in " + std::to_string(events) + " events";
    return {};
}

std::string check_formulas(const ValidationOptions &) {
    std::ostringstream err;
    TimingProfile unit{1, 1, 0, 10, 0, 0.25};
    if (threshold_ratio(0.25) != 5.0) err << "threshold_ratio(0.25) != 5; ";
    if (std::abs(expected_time_sequential(unit) - 57) > 1e-12) err << "sequential time != 57; ";
    if (std::abs(expected_time_star(unit) - 47) > 1e-12) err << "star time != 47; ";
    if (choose_strategy(unit) != Strategy::kMultipartiteStar) err << "ratio 10 should choose the star; ";
    if (choose_strategy(preset("nv_diamond")) != Strategy::kMultipartiteStar) err << "nv_diamond should choose the star; ";
    TimingProfile slow = unit;
    slow.tau_cnot = 3;
    if (choose_strategy(slow) != Strategy::kSequentialBipartite) err << "ratio 3 should choose sequential; ";
    if (std::abs(exact_parallel_pair_rounds(0.25) - (8 - 1 / 0.4375)) > 1e-12) err << "exact pair rounds; ";
    return err.str();
}

}  // namespace

std::vector<PropertyResult> run_validation(const ValidationOptions &options) {
    const std::vector<std::pair<const char *, std::function<std::string(const ValidationOptions &)>>> checks = {
        {"tableau-invariants", check_tableau_invariants},
        {"stabilizer-vs-statevector", check_stabilizer_vs_statevector},
        {"graph-roundtrip", check_graph_roundtrip},
        {"transfer-equivalence", check_transfer_equivalence},
        {"end-to-end", check_end_to_end},
        {"insulation", check_insulation},
        {"formulas", check_formulas},
    };
    std::vector<PropertyResult> results;
    for (const auto &[name, fn] : checks) {
        auto start = std::chrono::steady_clock::now();
        PropertyResult r;
        r.name = name;
        try {
            r.detail = fn(options);
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace brokergraph
