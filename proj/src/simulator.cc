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

#include "brokergraph/simulator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace brokergraph {

TrialResult run_trial(const BuildPlan &plan, const TimingProfile &profile, uint64_t seed,
                      const TrialOptions &options) {
    size_t n = std::max<size_t>(plan.target.num_vertices(), 1);
    BrokerNetwork net(n, profile, seed);
    net.set_retry_cap(options.retry_cap);
    net.set_fault_injection(options.faults);
    net.set_trace(options.trace);

    TrialResult result;
    EventLog round_events;
    if (options.record_events || options.observer) {
        net.set_event_sink([&](const Event &e) {
            if (options.record_events) round_events.push_back(e);
            if (options.observer) options.observer(e, net);
        });
    }

    Nanos now = 0;
    for (size_t r = 0; r < plan.rounds.size(); r++) {
        const auto &round = plan.rounds[r];
        Nanos build_end = now;
        std::vector<FragmentId> built;
        for (const auto &b : round) {
            Clock clock{now};
            FragmentStats fs;
            fs.round = r;
            fs.blueprint = b;
            if (b.kind == BlueprintKind::kEdge) {
                BellBuild bell = net.build_bell(b.nodes.at(0), b.nodes.at(1), clock);
                fs.attempts = bell.attempts;
                fs.failures = bell.failures;
                built.push_back(bell.fragment);
            } else {
                StarBuild star = net.build_star4({b.nodes.at(0), b.nodes.at(1), b.nodes.at(2), b.nodes.at(3)}, clock,
                                                 options.parallel_mode);
                fs.attempts = star.attempts;
                fs.failures = star.failures;
                result.stats.star_stage1_rounds.insert(result.stats.star_stage1_rounds.end(),
                                                       star.stage1_rounds.begin(), star.stage1_rounds.end());
                result.stats.star_repetitions.push_back(star.outer_repetitions);
                built.push_back(star.fragment);
            }
            fs.build_time = clock.now - now;
            build_end = std::max(build_end, clock.now);
            result.stats.attempts_total += fs.attempts;
            result.stats.failures_total += fs.failures;
            result.stats.per_fragment.push_back(std::move(fs));
        }
        result.stats.build_time += build_end - now;
        Nanos round_end = build_end;
        for (FragmentId f : built) {
            Clock clock{build_end};
            net.transfer_optimized(f, clock);
            round_end = std::max(round_end, clock.now);
        }
        now = round_end;
        std::stable_sort(round_events.begin(), round_events.end(),
                         [](const Event &a, const Event &b) { return a.timestamp_ns < b.timestamp_ns; });
        result.events.insert(result.events.end(), round_events.begin(), round_events.end());
        round_events.clear();
    }
    result.stats.total_time = now;
    result.stats.verified = net.verify_clients(plan.target);
    if (options.on_finish) options.on_finish(net);
    return result;
}

SummaryStats summarize(const std::vector<double> &samples) {
    SummaryStats s;
    s.count = samples.size();
    if (samples.empty()) return s;
    double sum = 0;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    for (double v : samples) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
        double sq = 0;
        for (double v : samples) sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(s.count - 1));
        s.std_error = s.stddev / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

namespace {

struct TrialDigest {
    double time = 0;
    double build_time = 0;
    double attempts = 0;
    bool verified = false;
    std::vector<size_t> stage1;
    std::vector<size_t> repetitions;
};

}  // namespace

MonteCarloResult run_monte_carlo(const BuildPlan &plan, const TimingProfile &profile, size_t trials,
                                 uint64_t base_seed, const MonteCarloOptions &options) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    profile.validate();
    TrialOptions trial_options = options.trial;
    trial_options.record_events = false;
    trial_options.trace = nullptr;

    std::vector<TrialDigest> digests(trials);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= trials) return;
            try {
                TrialResult r = run_trial(plan, profile, trial_seed(base_seed, i), trial_options);
                TrialDigest &d = digests[i];
                d.time = static_cast<double>(r.stats.total_time);
                d.build_time = static_cast<double>(r.stats.build_time);
                d.attempts = static_cast<double>(r.stats.attempts_total);
                d.verified = r.stats.verified;
                d.stage1 = std::move(r.stats.star_stage1_rounds);
                d.repetitions = std::move(r.stats.star_repetitions);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(trials);
                return;
            }
        }
    };

    size_t workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, trials);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; w++) pool.emplace_back(work);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    MonteCarloResult out;
    out.trials = trials;
    out.seed = base_seed;
    std::vector<double> time, build, attempts, stage1, reps;
    size_t verified = 0;
    for (const auto &d : digests) {
        time.push_back(d.time);
        build.push_back(d.build_time);
        attempts.push_back(d.attempts);
        for (size_t s : d.stage1) stage1.push_back(static_cast<double>(s));
        for (size_t s : d.repetitions) reps.push_back(static_cast<double>(s));
        verified += d.verified ? 1 : 0;
    }
    out.time = summarize(time);
    out.build_time = summarize(build);
    out.attempts = summarize(attempts);
    out.star_stage1_rounds = summarize(stage1);
    out.star_repetitions = summarize(reps);
    out.verified_fraction = static_cast<double>(verified) / static_cast<double>(trials);
    if (options.keep_samples) out.build_samples = std::move(build);
    return out;
}

StrategyComparison compare_strategies(const AdornedGraph &target, const TimingProfile &profile, size_t trials,
                                      uint64_t base_seed, const MonteCarloOptions &options) {
    StrategyComparison c;
    c.predicted_sequential = expected_time_sequential(profile);
    c.predicted_star = expected_time_star(profile);
    c.threshold = threshold_ratio(profile.p);
    c.chosen = choose_strategy(profile);
    BuildPlan seq = plan_growth(target, Strategy::kSequentialBipartite);
    BuildPlan star = plan_growth(target, Strategy::kMultipartiteStar);
    c.plans_equal = same_schedule(seq, star);
    c.sequential = run_monte_carlo(seq, profile, trials, base_seed, options);
    c.star = run_monte_carlo(star, profile, trials, base_seed, options);
    c.mc_preferred =
        c.star.time.mean <= c.sequential.time.mean ? Strategy::kMultipartiteStar : Strategy::kSequentialBipartite;
    return c;
}

}  // namespace brokergraph
