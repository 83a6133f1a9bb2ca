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
#include <functional>
#include <optional>
#include <vector>

#include "brokergraph/events.h"
#include "brokergraph/planner.h"
#include "brokergraph/protocol.h"
#include "brokergraph/timing.h"

namespace brokergraph {

struct TrialOptions {
    ParallelMode parallel_mode = ParallelMode::kExact;
    std::optional<size_t> retry_cap;
    bool record_events = true;
    FaultInjection faults;
    /// Called right after every event, in execution order, with the live network.
    std::function<void(const Event &, const BrokerNetwork &)> observer;
    /// Receives the network's state mutations when set.
    std::vector<TraceStep> *trace = nullptr;
    /// Called once with the final network, after verification.
    std::function<void(const BrokerNetwork &)> on_finish;
};

struct FragmentStats {
    size_t round = 0;
    Blueprint blueprint;
    size_t attempts = 0;
    size_t failures = 0;
    Nanos build_time = 0;
};

struct RunStats {
    Nanos total_time = 0;
    /// total_time less the transfer layers.
    Nanos build_time = 0;
    size_t attempts_total = 0;
    size_t failures_total = 0;
    std::vector<FragmentStats> per_fragment;
    /// Stage-one attempt rounds of every star repetition.
    std::vector<size_t> star_stage1_rounds;
    std::vector<size_t> star_repetitions;
    bool verified = false;
};

struct TrialResult {
    RunStats stats;
    EventLog events;
};

/// Executes the plan round by round. Fragments of a round run side by side
/// from the round start; once the slowest completes, every fragment is
/// transferred (optimized circuit) in one layer. Events are time-ordered.
TrialResult run_trial(const BuildPlan &plan, const TimingProfile &profile, uint64_t seed,
                      const TrialOptions &options = {});

struct SummaryStats {
    size_t count = 0;
    double mean = 0;
    double stddev = 0;
    double std_error = 0;
    double min = 0;
    double max = 0;
};

SummaryStats summarize(const std::vector<double> &samples);

struct MonteCarloOptions {
    TrialOptions trial;
    /// 0 selects the hardware concurrency.
    size_t workers = 0;
    /// Keep the per-trial build times in MonteCarloResult::build_samples.
    bool keep_samples = false;
};

struct MonteCarloResult {
    size_t trials = 0;
    uint64_t seed = 0;
    SummaryStats time;
    SummaryStats build_time;
    SummaryStats attempts;
    SummaryStats star_stage1_rounds;
    SummaryStats star_repetitions;
    double verified_fraction = 0;
    std::vector<double> build_samples;
};

/// Trial i is seeded with trial_seed(base_seed, i); results do not depend on
/// the worker count.
MonteCarloResult run_monte_carlo(const BuildPlan &plan, const TimingProfile &profile, size_t trials,
                                 uint64_t base_seed, const MonteCarloOptions &options = {});

struct StrategyComparison {
    double predicted_sequential = 0;
    double predicted_star = 0;
    double threshold = 0;
    MonteCarloResult sequential;
    MonteCarloResult star;
    /// choose_strategy(profile).
    Strategy chosen = Strategy::kMultipartiteStar;
    /// Lower Monte Carlo mean time (ties go to the star).
    Strategy mc_preferred = Strategy::kMultipartiteStar;
    /// Both strategies produced the same schedule.
    bool plans_equal = false;
};

StrategyComparison compare_strategies(const AdornedGraph &target, const TimingProfile &profile, size_t trials,
                                      uint64_t base_seed, const MonteCarloOptions &options = {});

}  // namespace brokergraph
