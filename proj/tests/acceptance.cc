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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brokergraph/experiment.h"
#include "brokergraph/planner.h"
#include "brokergraph/protocol.h"
#include "brokergraph/simulator.h"
#include "brokergraph/state_vector.h"
#include "brokergraph/timing.h"
#include "brokergraph/validation.h"

using namespace brokergraph;

namespace {

struct Outcome {
    bool passed = true;
    std::string failure;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok && passed) {
            passed = false;
            failure = what;
        }
    }
};

TimingProfile unit_profile(double p, Nanos tau_cnot) {
    TimingProfile t;
    t.tau_h = 1;
    t.tau_o = 1;
    t.tau_m = 0;
    t.tau_cnot = tau_cnot;
    t.tau_rf = 0;
    t.p = p;
    return t;
}

AdornedGraph k13() { return AdornedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool connected(const AdornedGraph &g) {
    size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack = {0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

// ---------------------------------------------------------------------------

void threshold_reproduction(Outcome &o) {
    double thr = threshold_ratio(0.25);
    o.require(thr == 5.0, "threshold_ratio(0.25) = " + fmt(thr));
    Strategy s = choose_strategy(unit_profile(0.25, 10));
    o.require(s == Strategy::kMultipartiteStar, "ratio 10 did not select MultipartiteStar");
    o.detail << "threshold_ratio(0.25) = " << fmt(thr) << ", ratio 10 selects MultipartiteStar";
}

void formula_values(Outcome &o) {
    auto t = unit_profile(0.25, 10);
    double seq = expected_time_sequential(t);
    double star = expected_time_star(t);
    double ratio = star / seq;
    o.require(seq == 57.0, "sequential = " + fmt(seq));
    o.require(star == 47.0, "star = " + fmt(star));
    o.require(within(ratio, 0.8246, 1e-4), "star/sequential = " + fmt(ratio));
    auto big = unit_profile(0.25, 1000000);
    double limit = expected_time_star(big) / expected_time_sequential(big);
    o.require(within(limit, 1.0 / 3.0, 1e-3), "ratio at 1e6 = " + fmt(limit));
    o.detail << "sequential 57, star 47, ratio " << fmt(ratio) << ", ratio at 1e6 = " << fmt(limit);
}

void mc_formula_agreement(Outcome &o) {
    const double p = 0.25;
    auto t = unit_profile(p, 10);

    auto edge = plan_growth(AdornedGraph::from_edges(2, {{0, 1}}), Strategy::kSequentialBipartite);
    auto link = run_monte_carlo(edge, t, 100000, 101);
    o.require(within(link.attempts.mean, 1 / p, 3 * link.attempts.std_error),
              "single link attempts " + fmt(link.attempts.mean));

    auto seq_plan = plan_growth(k13(), Strategy::kSequentialBipartite);
    auto seq = run_monte_carlo(seq_plan, t, 20000, 102);
    double seq_formula = 3 * ((1 / p) * 2 + 10 + 1);
    o.require(within(seq.time.mean, seq_formula, 3 * seq.time.std_error),
              "sequential K13 mean " + fmt(seq.time.mean) + " vs " + fmt(seq_formula));

    auto star_plan = plan_growth(k13(), Strategy::kMultipartiteStar);
    MonteCarloOptions exact;
    exact.trial.parallel_mode = ParallelMode::kExact;
    auto star = run_monte_carlo(star_plan, t, 20000, 103, exact);
    double rounds = 2 / p - 1 / (p * (2 - p));
    o.require(within(star.star_stage1_rounds.mean, rounds, 3 * star.star_stage1_rounds.std_error),
              "stage-1 rounds " + fmt(star.star_stage1_rounds.mean) + " vs " + fmt(rounds));

    o.detail << "attempts " << fmt(link.attempts.mean) << " +- " << fmt(link.attempts.std_error)
             << "; sequential " << fmt(seq.time.mean) << " +- " << fmt(seq.time.std_error) << " vs " << fmt(seq_formula)
             << "; stage-1 " << fmt(star.star_stage1_rounds.mean) << " +- " << fmt(star.star_stage1_rounds.std_error)
             << " vs " << fmt(rounds);
}

void quantum_correctness(Outcome &o) {
    std::vector<AdornedGraph> targets;
    for (size_t n = 1; n <= 5; n++) {
        std::vector<Edge> all;
        for (size_t a = 0; a < n; a++) {
            for (size_t b = a + 1; b < n; b++) all.emplace_back(a, b);
        }
        for (size_t mask = 0; mask < (size_t{1} << all.size()); mask++) {
            AdornedGraph g(n);
            for (size_t k = 0; k < all.size(); k++) {
                if ((mask >> k) & 1) g.add_edge(all[k].first, all[k].second);
            }
            if (connected(g)) targets.push_back(g);
        }
    }
    size_t exhaustive = targets.size();
    std::mt19937_64 rng(104);
    while (targets.size() < exhaustive + 200) {
        size_t n = 2 + rng() % 5;
        AdornedGraph g(n);
        for (size_t a = 0; a < n; a++) {
            for (size_t b = a + 1; b < n; b++) {
                if (rng() % 2) g.add_edge(a, b);
            }
        }
        if (g.num_edges() > 0) targets.push_back(g);
    }

    auto profile = preset("nv_diamond");
    size_t runs = 0, dense_checks = 0;
    for (size_t i = 0; i < targets.size() && o.passed; i++) {
        const auto &g = targets[i];
        for (auto s : {Strategy::kSequentialBipartite, Strategy::kMultipartiteStar}) {
            std::vector<TraceStep> trace;
            TrialOptions opt;
            opt.trace = &trace;
            bool dense_ok = true;
            bool dense_ran = false;
            opt.on_finish = [&](const BrokerNetwork &net) {
                size_t qubits = net.state().num_qubits();
                if (qubits > kMaxDenseQubits) return;
                DenseState psi = replay_trace(qubits, trace);
                dense_ok = overlap_magnitude(psi.amplitudes(), state_vector(net.state())) > 1 - 1e-9 &&
                           dense_clients_match(net, g, psi.amplitudes());
                dense_ran = true;
            };
            auto r = run_trial(plan_growth(g, s), profile, trial_seed(105, runs), opt);
            runs++;
            dense_checks += dense_ran ? 1 : 0;
            o.require(r.stats.verified, "verify_clients failed on " + g.str());
            o.require(dense_ok, "dense oracle disagrees on " + g.str());
        }
    }
    o.require(dense_checks == runs, "dense cross-check skipped");
    o.detail << exhaustive << " connected graphs (<= 5 vertices) + 200 random (<= 6), " << runs
             << " builds, all verified and dense-checked";
}

std::vector<bool> bits(unsigned mask, size_t n) {
    std::vector<bool> out;
    for (size_t k = 0; k < n; k++) out.push_back((mask >> k) & 1);
    return out;
}

void circuit_equivalence(Outcome &o) {
    struct Case {
        const char *name;
        size_t nodes;
        AdornedGraph target;
    };
    std::vector<Case> cases = {{"edge", 2, AdornedGraph::from_edges(2, {{0, 1}})}, {"star4", 4, k13()}};
    size_t branches = 0;
    for (const auto &c : cases) {
        auto expected = canonical_generators(graph_stabilizers(c.target).stabilizers());
        for (unsigned mask = 0; mask < (1u << c.nodes); mask++) {
            std::optional<std::vector<PauliString>> group[2];
            for (int naive = 0; naive < 2; naive++) {
                BrokerNetwork net(c.nodes, unit_profile(1, 10), 106 + mask);
                Clock clock;
                FragmentId f = c.nodes == 2 ? net.build_bell(0, 1, clock).fragment
                                            : net.build_star4({0, 1, 2, 3}, clock).fragment;
                net.entropy().script_coins(bits(mask, c.nodes));
                auto rep = naive ? net.transfer_naive(f, clock) : net.transfer_optimized(f, clock);
                bool branch_taken = net.entropy().pending_coins() == 0;
                for (size_t j = 0; j < c.nodes; j++) branch_taken &= (rep.outcomes[j] == -1) == bool((mask >> j) & 1);
                o.require(branch_taken, std::string(c.name) + ": branch not reached");
                o.require(net.verify_clients(c.target), std::string(c.name) + ": verify_clients failed");
                group[naive] = corrected_client_group(net);
            }
            o.require(group[0].has_value() && group[1].has_value(), std::string(c.name) + ": clients entangled");
            if (!o.passed) return;
            o.require(*group[0] == *group[1], std::string(c.name) + ": naive and optimized differ, mask " +
                                                   std::to_string(mask));
            o.require(*group[0] == expected, std::string(c.name) + ": corrected group is not the target");
            branches++;
        }
    }
    o.detail << branches << " branches (4 edge + 16 star4) agree after byproduct correction";
}

void fusion_identity(Outcome &o) {
    BrokerNetwork net(4, unit_profile(0.25, 10), 107);
    net.entropy().script_heralds({true, true, true});
    Clock clock;
    auto s = net.build_star4({0, 1, 2, 3}, clock);
    std::vector<size_t> brokers = {0, 2, 4, 6};
    auto reduced = reduced_state(net.state(), brokers);
    o.require(reduced.has_value(), "brokers entangled with clients");
    if (!o.passed) return;
    // Heralds postselect odd parity; X on the middle two qubits maps the
    // result onto (|0011> + |1100>)/sqrt2 (qubit 0 leftmost).
    Tableau t = *reduced;
    t.x(1);
    t.x(2);
    Amplitudes oracle(16);
    oracle[0b1100] = 1 / std::sqrt(2.0);  // qubits 2,3 set
    oracle[0b0011] = 1 / std::sqrt(2.0);  // qubits 0,1 set
    double overlap = overlap_magnitude(state_vector(t), oracle);
    o.require(overlap > 1 - 1e-9, "overlap with oracle " + fmt(overlap));
    auto extracted = extract_graph(*reduced);
    auto aligned = align_to_shape(extracted, k13());
    o.require(aligned.has_value(), "extract_graph not LC-equivalent to K13: " + extracted.str());
    o.require(net.verify_fragment(s.fragment), "fragment bookkeeping");
    o.detail << "overlap " << fmt(overlap) << ", extract_graph " << extracted.str() << " ~ K13";
}

void insulation(Outcome &o) {
    const size_t trials = 10000;
    auto profile = preset("nv_diamond");
    profile.p = 0.1;
    std::vector<AdornedGraph> targets = {k13(), AdornedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                         AdornedGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})};
    size_t violations = 0, events = 0, changes = 0;
    for (size_t i = 0; i < trials; i++) {
        const auto &g = targets[i % targets.size()];
        Strategy s = (i / targets.size()) % 2 ? Strategy::kMultipartiteStar : Strategy::kSequentialBipartite;
        std::vector<PauliString> last = BrokerNetwork(g.num_vertices(), profile, 0).client_snapshot();
        TrialOptions opt;
        opt.record_events = false;
        opt.observer = [&](const Event &e, const BrokerNetwork &net) {
            events++;
            auto snap = net.client_snapshot();
            if (snap != last) {
                changes++;
                if (e.kind != EventKind::kTransferDone) violations++;
                last = std::move(snap);
            }
        };
        auto r = run_trial(plan_growth(g, s), profile, trial_seed(108, i), opt);
        o.require(r.stats.verified, "trial " + std::to_string(i) + " not verified");
    }
    o.require(violations == 0, std::to_string(violations) + " client-group changes outside TransferDone");
    o.detail << trials << " trials at p = 0.1, " << events << " events, " << changes << " changes, " << violations
             << " violations";
}

void decision_boundary(Outcome &o) {
    SweepConfig cfg;
    cfg.p_values = {0.1, 0.2, 0.25, 0.3, 0.5};
    cfg.ratios = parse_value_list("0:30:1");
    cfg.trials = 100000;
    cfg.seed = 109;
    cfg.parallel_mode = ParallelMode::kPaperApprox;
    auto rows = run_sweep(cfg);
    o.require(rows.size() == cfg.p_values.size() * cfg.ratios.size(), "row count");
    auto reparsed = parse_sweep_csv(sweep_csv(rows));
    o.require(reparsed == rows, "sweep CSV does not round-trip");
    std::ostringstream flips;
    for (double p : cfg.p_values) {
        double thr = 1 / (p * p) - 2.5 / p - 1;
        double last_seq = -1, first_star = -1;
        bool single_flip = true;
        for (const auto &r : rows) {
            if (r.p != p) continue;
            o.require(r.mc_choice == "sequential" || r.mc_choice == "star", "bad choice label");
            if (r.mc_choice == "sequential") {
                if (first_star >= 0) single_flip = false;
                last_seq = r.ratio;
            } else if (first_star < 0) {
                first_star = r.ratio;
            }
        }
        o.require(single_flip, "choice flips more than once at p = " + fmt(p));
        bool brackets = (last_seq < 0 || last_seq <= thr) && (first_star < 0 || first_star >= thr);
        o.require(brackets, "flip at p = " + fmt(p) + " does not bracket " + fmt(thr));
        flips << " p=" << fmt(p) << ":(" << (last_seq < 0 ? std::string("-") : fmt(last_seq)) << ","
              << (first_star < 0 ? std::string("-") : fmt(first_star)) << ")~" << fmt(thr);
    }
    o.require(sweep_bracket_violations(rows).empty(), "sweep_bracket_violations is not empty");
    o.detail << "flips" << flips.str();
}

void determinism(Outcome &o) {
    auto profile = preset("nv_diamond");
    auto run_files = [&](uint64_t seed) {
        auto c = compare_strategies(k13(), profile, 300, seed);
        std::vector<SimulationRow> rows = {simulation_row(Strategy::kSequentialBipartite, c.sequential),
                                           simulation_row(Strategy::kMultipartiteStar, c.star)};
        auto log = run_trial(plan_growth(k13(), Strategy::kMultipartiteStar), profile, seed).events;
        return simulation_csv(rows) + simulation_json(rows) + prediction_csv(prediction_row(profile)) +
               prediction_json(prediction_row(profile)) + event_log_to_csv(log);
    };
    auto a = run_files(110);
    auto b = run_files(110);
    auto c = run_files(111);
    o.require(a == b, "same seed gave different output");
    o.require(a != c, "different seeds gave identical output");
    MonteCarloOptions one, many;
    one.workers = 1;
    many.workers = 3;
    auto plan = plan_growth(k13(), Strategy::kSequentialBipartite);
    auto x = run_monte_carlo(plan, profile, 500, 112, one);
    auto y = run_monte_carlo(plan, profile, 500, 112, many);
    o.require(x.time.mean == y.time.mean && x.attempts.mean == y.attempts.mean, "worker count changes results");
    o.detail << "CSV, JSON and event logs byte-identical for equal seeds (" << a.size() << " bytes)";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char *name;
        std::function<void(Outcome &)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "threshold reproduction", threshold_reproduction},
        {2, "formula values", formula_values},
        {3, "Monte Carlo vs formulas", mc_formula_agreement},
        {4, "quantum correctness", quantum_correctness},
        {5, "circuit equivalence", circuit_equivalence},
        {6, "fusion identity", fusion_identity},
        {7, "insulation", insulation},
        {8, "decision-boundary sweep", decision_boundary},
        {9, "determinism", determinism},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s (%.1f s): %s\n", o.passed ? "PASS" : "FAIL", c.number, c.name, secs,
                    o.passed ? o.detail.str().c_str() : o.failure.c_str());
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
