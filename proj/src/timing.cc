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

#include "brokergraph/timing.h"

#include <cmath>
#include <stdexcept>

namespace brokergraph {

namespace {

void check_p(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
}

}  // namespace

void TimingProfile::validate() const {
    auto nonneg = [](Nanos v, const char *name) {
        if (v < 0) throw std::invalid_argument(std::string(name) + " must be non-negative");
    };
    nonneg(tau_h, "tau_h");
    nonneg(tau_o, "tau_o");
    nonneg(tau_m, "tau_m");
    nonneg(tau_cnot, "tau_cnot");
    nonneg(tau_rf, "tau_rf");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
    if (attempt_ns() <= 0) throw std::invalid_argument("tau_h + tau_o + tau_m must be positive");
}

std::string_view strategy_name(Strategy s) {
    return s == Strategy::kSequentialBipartite ? "sequential" : "star";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "sequential" || name == "SequentialBipartite") return Strategy::kSequentialBipartite;
    if (name == "star" || name == "MultipartiteStar") return Strategy::kMultipartiteStar;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

const std::vector<Preset> &presets() {
    static const std::vector<Preset> table = {
        {"nv_diamond",
         "N-V centre: 50 ns hard pulse, CNOT ten times slower, 13 ns optical readout, 10 us RF pulse, p = 0.25",
         {.tau_h = 50, .tau_o = 50, .tau_m = 13, .tau_cnot = 500, .tau_rf = 10000, .p = 0.25}},
        {"nv_diamond_fast_cnot",
         "N-V centre reading the 50 ns pulse as the selective CNOT: tau_h = 5 ns, tau_cnot = 50 ns",
         {.tau_h = 5, .tau_o = 5, .tau_m = 13, .tau_cnot = 50, .tau_rf = 10000, .p = 0.25}},
        {"unit_ratio10",
         "Dimensionless units of tau_h: tau_o = tau_h = 1, tau_m = 0, tau_cnot = 10, p = 0.25",
         {.tau_h = 1, .tau_o = 1, .tau_m = 0, .tau_cnot = 10, .tau_rf = 200, .p = 0.25}},
    };
    return table;
}

TimingProfile preset(std::string_view name) {
    for (const auto &p : presets()) {
        if (p.name == name) return p.profile;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

double expected_time_sequential(const TimingProfile &t) {
    check_p(t.p);
    double attempt = static_cast<double>(t.tau_h + t.tau_o + t.tau_m);
    return 3.0 * (attempt / t.p + static_cast<double>(t.tau_cnot + t.tau_h));
}

double expected_time_star(const TimingProfile &t) {
    check_p(t.p);
    double attempt = static_cast<double>(t.tau_h + t.tau_o + t.tau_m);
    return (attempt / t.p + static_cast<double>(t.tau_o)) / t.p + static_cast<double>(t.tau_cnot + t.tau_h);
}

double threshold_ratio(double p) {
    check_p(p);
    return 1.0 / (p * p) - 5.0 / (2.0 * p) - 1.0;
}

Strategy choose_strategy(const TimingProfile &profile) {
    return expected_time_star(profile) <= expected_time_sequential(profile) ? Strategy::kMultipartiteStar
                                                                             : Strategy::kSequentialBipartite;
}

double exact_parallel_pair_rounds(double p) {
    check_p(p);
    return 2.0 / p - 1.0 / (p * (2.0 - p));
}

}  // namespace brokergraph
