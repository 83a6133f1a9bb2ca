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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace brokergraph {

using Nanos = int64_t;

/// Durations of the primitive broker/client operations plus the optical
/// success probability. All durations are integer nanoseconds.
struct TimingProfile {
    Nanos tau_h = 0;     // broker hard pulse (Hadamard / rotation)
    Nanos tau_o = 0;     // one optical entangling attempt
    Nanos tau_m = 0;     // broker measurement
    Nanos tau_cnot = 0;  // client-controlled selective CNOT on the broker
    Nanos tau_rf = 0;    // RF pulse targeting the client (readout only)
    double p = 1.0;      // heralded success probability

    /// Cost of one fresh attempt: prepare, optical attempt, herald detection.
    Nanos attempt_ns() const { return tau_h + tau_o + tau_m; }
    /// Cost of mapping a completed fragment onto its clients.
    Nanos transfer_ns() const { return tau_cnot + tau_h + tau_m; }
    /// Cost of reading out and recycling one client.
    Nanos readout_ns() const { return 2 * tau_cnot + tau_rf + 2 * tau_h + tau_m; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const TimingProfile &) const = default;
};

enum class Strategy { kSequentialBipartite, kMultipartiteStar };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

struct Preset {
    std::string name;
    std::string description;
    TimingProfile profile;
};

/// Named profiles: "nv_diamond", "nv_diamond_fast_cnot", "unit_ratio10".
const std::vector<Preset> &presets();
/// Throws std::invalid_argument for unknown names.
TimingProfile preset(std::string_view name);

/// 3 (1/p (tau_h + tau_o + tau_m) + tau_cnot + tau_h): three bipartite
/// rounds, each retried until success and then transferred.
double expected_time_sequential(const TimingProfile &profile);

/// 1/p (1/p (tau_h + tau_o + tau_m) + tau_o) + tau_cnot + tau_h. The two
/// stage-one pairs are treated as a single geometric wait (an
/// approximation; see exact_parallel_pair_rounds).
double expected_time_star(const TimingProfile &profile);

/// Smallest tau_cnot/tau_h for which the star is worth building when
/// tau_o = tau_h and tau_m = 0: 1/p^2 - 5/(2p) - 1.
double threshold_ratio(double p);

/// MultipartiteStar iff expected_time_star <= expected_time_sequential.
Strategy choose_strategy(const TimingProfile &profile);

/// E[max(G1, G2)] for two iid geometric(p) attempt counts: 2/p - 1/(p(2-p)).
double exact_parallel_pair_rounds(double p);

}  // namespace brokergraph
