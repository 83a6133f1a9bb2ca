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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brokergraph/graph.h"
#include "brokergraph/planner.h"
#include "brokergraph/simulator.h"
#include "brokergraph/timing.h"

namespace brokergraph {

/// Malformed configuration, graph or results file.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class StrategySelection { kAuto, kSequential, kStar };
enum class OutputFormat { kCsv, kJson };

std::string_view parallel_mode_name(ParallelMode m);
ParallelMode parse_parallel_mode(std::string_view name);
StrategySelection parse_strategy_selection(std::string_view name);
std::string_view strategy_selection_name(StrategySelection s);
OutputFormat parse_output_format(std::string_view name);

/// Partially specified profile; fields left empty come from the preset.
struct ProfileSpec {
    std::optional<std::string> preset;
    std::optional<Nanos> tau_h, tau_o, tau_m, tau_cnot, tau_rf;
    std::optional<double> p;

    /// Throws ConfigError naming the first missing or invalid field.
    TimingProfile resolve() const;
};

struct ExperimentConfig {
    ProfileSpec profile;
    std::optional<std::string> graph_path;
    /// Inline edge list ("0 1, 0 2") used when no graph file is given.
    std::optional<std::string> edges;
    StrategySelection strategy = StrategySelection::kAuto;
    size_t trials = 1000;
    uint64_t seed = 1;
    ParallelMode parallel_mode = ParallelMode::kExact;
    OutputFormat format = OutputFormat::kCsv;
    size_t workers = 0;
    std::optional<size_t> retry_cap;
};

/// Either JSON (`{"profile": {...}, "experiment": {...}}`) or flat
/// `key = value` lines under `[profile]` and `[experiment]` headers.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

/// Whitespace separated "u v" pairs, one edge per line; '#' starts a comment.
/// Commas may separate edges on one line.
AdornedGraph parse_edge_list(std::string_view text);
AdornedGraph load_edge_list(const std::string &path);

/// The target named by the config: graph file, inline edges, or K_{1,3}.
AdornedGraph config_target(const ExperimentConfig &config);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

struct SimulationRow {
    std::string strategy;
    size_t trials = 0;
    uint64_t seed = 0;
    double mean_time_ns = 0;
    double stderr_ns = 0;
    double mean_attempts = 0;
    double verified_fraction = 0;

    bool operator==(const SimulationRow &) const = default;
};

struct PredictionRow {
    double tau_sequential_ns = 0;
    double tau_star_ns = 0;
    double threshold_ratio = 0;
    double star_over_sequential = 0;
    std::string chosen_strategy;

    bool operator==(const PredictionRow &) const = default;
};

SimulationRow simulation_row(Strategy s, const MonteCarloResult &r);
PredictionRow prediction_row(const TimingProfile &profile);

std::string simulation_csv(const std::vector<SimulationRow> &rows);
std::vector<SimulationRow> parse_simulation_csv(std::string_view text);
std::string simulation_json(const std::vector<SimulationRow> &rows);
std::vector<SimulationRow> parse_simulation_json(std::string_view text);

std::string prediction_csv(const PredictionRow &row);
PredictionRow parse_prediction_csv(std::string_view text);
std::string prediction_json(const PredictionRow &row);
PredictionRow parse_prediction_json(std::string_view text);

struct SweepConfig {
    std::vector<double> p_values;
    std::vector<double> ratios;
    Nanos tau_h = 50;
    size_t trials = 10000;
    uint64_t seed = 1;
    ParallelMode parallel_mode = ParallelMode::kPaperApprox;
    size_t workers = 0;
    AdornedGraph target = AdornedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
};

/// tau_o = tau_h, tau_m = tau_rf = 0, tau_cnot = round(ratio * tau_h).
TimingProfile sweep_profile(double p, double ratio, Nanos tau_h);

struct SweepRow {
    double p = 0;
    double ratio = 0;
    double threshold = 0;
    double tau_sequential_ns = 0;
    double tau_star_ns = 0;
    double mc_sequential_mean_ns = 0;
    double mc_sequential_stderr_ns = 0;
    double mc_star_mean_ns = 0;
    double mc_star_stderr_ns = 0;
    std::string closed_form_choice;
    std::string mc_choice;

    bool operator==(const SweepRow &) const = default;
};

/// Build times never involve tau_cnot, so each (p, strategy) pair is
/// simulated once and shared by every ratio: the cell mean is the mean build
/// time plus one transfer layer per round.
std::vector<SweepRow> run_sweep(const SweepConfig &config);

std::string sweep_csv(const std::vector<SweepRow> &rows);
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

/// Cells whose Monte Carlo choice contradicts threshold_ratio(p): below the
/// threshold the sequential strategy must win, above it the star.
std::vector<SweepRow> sweep_bracket_violations(const std::vector<SweepRow> &rows);

/// "lo,hi" style values or "lo:hi:step" ranges.
std::vector<double> parse_value_list(std::string_view text);

}  // namespace brokergraph
