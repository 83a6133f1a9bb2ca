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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "brokergraph/experiment.h"
#include "brokergraph/planner.h"
#include "brokergraph/simulator.h"
#include "brokergraph/timing.h"
#include "brokergraph/validation.h"
#include "json.hpp"

using namespace brokergraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

const char *long_name(Strategy s) {
    return s == Strategy::kMultipartiteStar ? "MultipartiteStar" : "SequentialBipartite";
}

/// Flags shared by every subcommand that needs a profile or experiment.
struct CommonFlags {
    std::string profile_file;
    std::string preset;
    std::optional<Nanos> tau_h, tau_o, tau_m, tau_cnot, tau_rf;
    std::optional<double> p;
    std::string graph;
    std::string strategy;
    std::optional<size_t> trials;
    std::optional<uint64_t> seed;
    std::string parallel_mode;
    std::string out;
    std::string format;
    std::optional<size_t> workers;
    std::optional<size_t> retry_cap;

    void add_profile(CLI::App *app) {
        app->add_option("--profile", profile_file, "Config file ([profile]/[experiment] key = value, or JSON)");
        app->add_option("--preset", preset, "Named timing profile (see 'presets')");
        app->add_option("--tau-h", tau_h, "Broker hard pulse, ns");
        app->add_option("--tau-o", tau_o, "Optical attempt, ns");
        app->add_option("--tau-m", tau_m, "Broker measurement, ns");
        app->add_option("--tau-cnot", tau_cnot, "Client-controlled CNOT, ns");
        app->add_option("--tau-rf", tau_rf, "Client RF pulse, ns");
        app->add_option("--p", p, "Heralded success probability");
    }

    void add_experiment(CLI::App *app) {
        add_profile(app);
        app->add_option("--graph", graph, "Edge list file, one 'u v' pair per line");
        app->add_option("--strategy", strategy, "auto | sequential | star");
        app->add_option("--trials", trials, "Monte Carlo trials");
        app->add_option("--seed", seed, "Base seed");
        app->add_option("--parallel-mode", parallel_mode, "exact | paper-approx");
        app->add_option("--out", out, "Output file (default: standard output)");
        app->add_option("--format", format, "csv | json");
        app->add_option("--workers", workers, "Worker threads (default: all cores)");
        app->add_option("--retry-cap", retry_cap, "Abort a fragment after this many attempts");
    }

    ExperimentConfig config() const {
        ExperimentConfig c;
        if (!profile_file.empty()) c = load_config(profile_file);
        if (!preset.empty()) c.profile.preset = preset;
        if (tau_h) c.profile.tau_h = tau_h;
        if (tau_o) c.profile.tau_o = tau_o;
        if (tau_m) c.profile.tau_m = tau_m;
        if (tau_cnot) c.profile.tau_cnot = tau_cnot;
        if (tau_rf) c.profile.tau_rf = tau_rf;
        if (p) c.profile.p = p;
        if (!graph.empty()) c.graph_path = graph;
        if (!strategy.empty()) c.strategy = parse_strategy_selection(strategy);
        if (trials) c.trials = *trials;
        if (seed) c.seed = *seed;
        if (!parallel_mode.empty()) c.parallel_mode = parse_parallel_mode(parallel_mode);
        if (!format.empty()) c.format = parse_output_format(format);
        if (workers) c.workers = *workers;
        if (retry_cap) c.retry_cap = retry_cap;
        if (c.trials == 0) throw ConfigError("trials must be at least 1");
        return c;
    }
};

void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

int cmd_presets() {
    for (const auto &p : presets()) {
        const auto &t = p.profile;
        std::cout << p.name << "\n  " << p.description << "\n  tau_h=" << t.tau_h << " tau_o=" << t.tau_o
                  << " tau_m=" << t.tau_m << " tau_cnot=" << t.tau_cnot << " tau_rf=" << t.tau_rf
                  << " p=" << format_double(t.p) << "\n";
    }
    return kExitOk;
}

int cmd_expected(const CommonFlags &flags) {
    TimingProfile t = flags.config().profile.resolve();
    PredictionRow row = prediction_row(t);
    std::printf("tau_sequential_ns     %.4f\n", row.tau_sequential_ns);
    std::printf("tau_star_ns           %.4f\n", row.tau_star_ns);
    std::printf("threshold_ratio       %.4f\n", row.threshold_ratio);
    std::printf("cnot_over_h           %s\n",
                t.tau_h > 0 ? format_double(static_cast<double>(t.tau_cnot) / static_cast<double>(t.tau_h)).c_str()
                            : "inf");
    std::printf("chosen_strategy       %s\n", long_name(choose_strategy(t)));
    std::printf("star_over_sequential  %.4f\n", row.star_over_sequential);
    std::printf("exact_pair_rounds     %.4f\n", exact_parallel_pair_rounds(t.p));
    return kExitOk;
}

int cmd_validate(const ValidationOptions &options) {
    auto results = run_validation(options);
    const PropertyResult *first_failure = nullptr;
    for (const auto &r : results) {
        std::printf("%-28s %s  (%.2f s)%s%s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        if (!r.passed && !first_failure) first_failure = &r;
    }
    if (first_failure) {
        std::printf("validation failed: %s\n", first_failure->name.c_str());
        return kExitFailure;
    }
    std::printf("all %zu properties passed\n", results.size());
    return kExitOk;
}

std::string sibling(const std::string &out, const std::string &suffix) {
    return out + suffix;
}

int cmd_simulate(const CommonFlags &flags, const std::string &event_log) {
    ExperimentConfig c = flags.config();
    TimingProfile t = c.profile.resolve();
    AdornedGraph target = config_target(c);

    MonteCarloOptions mc;
    mc.workers = c.workers;
    mc.trial.parallel_mode = c.parallel_mode;
    mc.trial.retry_cap = c.retry_cap;

    std::vector<SimulationRow> rows;
    Strategy logged = choose_strategy(t);
    if (c.strategy == StrategySelection::kAuto) {
        StrategyComparison cmp = compare_strategies(target, t, c.trials, c.seed, mc);
        rows.push_back(simulation_row(Strategy::kSequentialBipartite, cmp.sequential));
        rows.push_back(simulation_row(Strategy::kMultipartiteStar, cmp.star));
        std::cerr << "closed-form choice: " << long_name(cmp.chosen) << ", Monte Carlo preference: "
                  << long_name(cmp.mc_preferred) << (cmp.plans_equal ? " (plans identical)" : "") << "\n";
    } else {
        logged = c.strategy == StrategySelection::kStar ? Strategy::kMultipartiteStar : Strategy::kSequentialBipartite;
        BuildPlan plan = plan_growth(target, logged);
        rows.push_back(simulation_row(logged, run_monte_carlo(plan, t, c.trials, c.seed, mc)));
    }

    PredictionRow predicted = prediction_row(t);
    bool json = c.format == OutputFormat::kJson;
    emit(flags.out, json ? simulation_json(rows) : simulation_csv(rows));
    if (!flags.out.empty()) {
        write_file(sibling(flags.out, json ? ".predictions.json" : ".predictions.csv"),
                   json ? prediction_json(predicted) : prediction_csv(predicted));
    } else {
        std::cout << (json ? prediction_json(predicted) : prediction_csv(predicted));
    }

    if (!event_log.empty()) {
        TrialOptions opts;
        opts.parallel_mode = c.parallel_mode;
        opts.retry_cap = c.retry_cap;
        TrialResult r = run_trial(plan_growth(target, logged), t, trial_seed(c.seed, 0), opts);
        write_file(event_log, event_log_to_csv(r.events));
    }
    for (const auto &r : rows) {
        if (r.verified_fraction != 1.0) {
            std::cerr << r.strategy << ": only " << r.verified_fraction << " of trials verified\n";
            return kExitFailure;
        }
    }
    return kExitOk;
}

int cmd_sweep(const CommonFlags &flags, const std::string &p_values, const std::string &ratios, Nanos tau_h) {
    SweepConfig s;
    s.p_values = parse_value_list(p_values);
    s.ratios = parse_value_list(ratios);
    s.tau_h = tau_h;
    if (tau_h <= 0) throw ConfigError("tau_h must be positive for a sweep");
    if (flags.trials) s.trials = *flags.trials;
    if (s.trials == 0) throw ConfigError("trials must be at least 1");
    if (flags.seed) s.seed = *flags.seed;
    if (!flags.parallel_mode.empty()) s.parallel_mode = parse_parallel_mode(flags.parallel_mode);
    if (flags.workers) s.workers = *flags.workers;
    if (!flags.graph.empty()) s.target = load_edge_list(flags.graph);
    auto rows = run_sweep(s);
    emit(flags.out, sweep_csv(rows));
    auto bad = sweep_bracket_violations(rows);
    for (const auto &r : bad) {
        std::cerr << "p=" << format_double(r.p) << " ratio=" << format_double(r.ratio) << " chooses " << r.mc_choice
                  << " against threshold " << format_double(r.threshold) << "\n";
    }
    return bad.empty() ? kExitOk : kExitFailure;
}

int cmd_plan(const CommonFlags &flags) {
    ExperimentConfig c = flags.config();
    AdornedGraph target = config_target(c);
    std::vector<Strategy> strategies;
    if (c.strategy == StrategySelection::kAuto) {
        strategies = {Strategy::kSequentialBipartite, Strategy::kMultipartiteStar};
    } else {
        strategies = {c.strategy == StrategySelection::kStar ? Strategy::kMultipartiteStar
                                                             : Strategy::kSequentialBipartite};
    }
    std::string text;
    if (c.format == OutputFormat::kJson) {
        nlohmann::json doc = nlohmann::json::array();
        for (Strategy s : strategies) {
            BuildPlan plan = plan_growth(target, s);
            nlohmann::json rounds = nlohmann::json::array();
            for (const auto &round : plan.rounds) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto &b : round) {
                    r.push_back({{"kind", b.kind == BlueprintKind::kEdge ? "edge" : "star4"}, {"nodes", b.nodes}});
                }
                rounds.push_back(r);
            }
            doc.push_back({{"strategy", std::string(strategy_name(s))}, {"rounds", rounds}});
        }
        text = doc.dump(2) + "\n";
    } else {
        for (Strategy s : strategies) text += plan_growth(target, s).str();
    }
    emit(flags.out, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Brokered graph-state growth: protocol engine, timing model and Monte Carlo experiments"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_subcommand("presets", "List the named timing profiles");

    auto *expected = app.add_subcommand("expected", "Closed-form times, threshold and chosen strategy");
    flags.add_profile(expected);

    ValidationOptions vopts;
    auto *validate = app.add_subcommand("validate", "Run the oracle and property suite");
    validate->add_flag("--corrupt-byproducts", vopts.corrupt_byproducts, "Drop transfer corrections (negative control)");
    validate->add_flag("--quick", vopts.quick, "Fewer random cases");
    validate->add_option("--seed", vopts.seed, "Seed of the random cases");

    std::string event_log;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo growth of a target graph");
    flags.add_experiment(simulate);
    simulate->add_option("--event-log", event_log, "Write the event log of trial 0 as CSV");

    std::string p_values = "0.1,0.2,0.25,0.3,0.5";
    std::string ratios = "1:30:1";
    Nanos sweep_tau_h = 50;
    auto *sweep = app.add_subcommand("sweep", "Strategy choice over a (p, tau_cnot/tau_h) grid");
    sweep->add_option("--p-values", p_values, "Comma list or lo:hi:step");
    sweep->add_option("--ratios", ratios, "Comma list or lo:hi:step");
    sweep->add_option("--tau-h", sweep_tau_h, "tau_h = tau_o in ns");
    sweep->add_option("--graph", flags.graph, "Target edge list (default: K_{1,3})");
    sweep->add_option("--trials", flags.trials, "Trials per (p, strategy)");
    sweep->add_option("--seed", flags.seed, "Base seed");
    sweep->add_option("--parallel-mode", flags.parallel_mode, "exact | paper-approx (default)");
    sweep->add_option("--out", flags.out, "Output CSV (default: standard output)");
    sweep->add_option("--workers", flags.workers, "Worker threads");

    auto *plan = app.add_subcommand("plan", "Print the build plan of a target graph");
    plan->add_option("--graph", flags.graph, "Edge list file");
    plan->add_option("--profile", flags.profile_file, "Config file");
    plan->add_option("--strategy", flags.strategy, "auto | sequential | star");
    plan->add_option("--format", flags.format, "csv (text) | json");
    plan->add_option("--out", flags.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("presets")) return cmd_presets();
        if (app.got_subcommand(expected)) return cmd_expected(flags);
        if (app.got_subcommand(validate)) return cmd_validate(vopts);
        if (app.got_subcommand(simulate)) return cmd_simulate(flags, event_log);
        if (app.got_subcommand(sweep)) return cmd_sweep(flags, p_values, ratios, sweep_tau_h);
        if (app.got_subcommand(plan)) return cmd_plan(flags);
    } catch (const RetryCapExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::runtime_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
