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
#include <string>
#include <vector>

#include "brokergraph/graph.h"
#include "brokergraph/protocol.h"
#include "brokergraph/state_vector.h"

namespace brokergraph {

/// Replays a network trace on a dense simulator started in |+>^n.
DenseState replay_trace(size_t num_qubits, const std::vector<TraceStep> &trace);

/// Canonical generators of the clients' state after undoing every recorded
/// byproduct; nullopt when the clients are entangled with the brokers.
std::optional<std::vector<PauliString>> corrected_client_group(const BrokerNetwork &net);

/// Dense check that the target's adorned graph generators (with the
/// network's recorded byproducts) stabilize `psi`, up to `tol`.
bool dense_clients_match(const BrokerNetwork &net, const AdornedGraph &target, const Amplitudes &psi,
                         double tol = 1e-9);

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct ValidationOptions {
    uint64_t seed = 2024;
    /// Drop the Z corrections of the optimized transfer (negative control).
    bool corrupt_byproducts = false;
    /// Fewer random cases, for fast smoke runs.
    bool quick = false;
};

/// Properties, in order: tableau-invariants, stabilizer-vs-statevector,
/// graph-roundtrip, transfer-equivalence, end-to-end, insulation, formulas.
std::vector<PropertyResult> run_validation(const ValidationOptions &options = {});

}  // namespace brokergraph
