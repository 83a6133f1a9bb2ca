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
#include <optional>
#include <string>
#include <vector>

#include "brokergraph/events.h"
#include "brokergraph/graph.h"
#include "brokergraph/timing.h"

namespace brokergraph {

enum class BlueprintKind { kEdge, kStar4 };

/// One fragment to broker. Edge: {a, b} with a < b. Star4: {center, leaf0,
/// leaf1, leaf2} with ascending leaves; built as pairs (center, leaf0) and
/// (leaf1, leaf2) fused on (leaf0, leaf1).
struct Blueprint {
    BlueprintKind kind = BlueprintKind::kEdge;
    std::vector<NodeId> nodes;

    std::vector<Edge> target_edges() const;
    std::string str() const;
    bool operator==(const Blueprint &) const = default;
};

/// Target vertex v is realised by node v.
struct BuildPlan {
    AdornedGraph target;
    Strategy strategy = Strategy::kSequentialBipartite;
    std::vector<std::vector<Blueprint>> rounds;

    size_t num_fragments() const;
    std::string str() const;
};

/// Greedy decomposition of `target` into rounds of node-disjoint fragments.
/// Sequential: every edge on its own, first-fit in ascending edge order.
/// Star: each degree-3 vertex (ascending) whose three edges are still unbuilt
/// becomes a star, the rest are edges; stars are scheduled first.
BuildPlan plan_growth(const AdornedGraph &target, Strategy strategy, size_t num_nodes);
inline BuildPlan plan_growth(const AdornedGraph &target, Strategy strategy) {
    return plan_growth(target, strategy, target.num_vertices());
}

/// Empty when every round is node-disjoint and the fragments cover each
/// target edge exactly once; otherwise the first problem found.
std::optional<std::string> check_plan(const BuildPlan &plan);

/// True when both plans schedule the same fragments in the same rounds.
bool same_schedule(const BuildPlan &a, const BuildPlan &b);

}  // namespace brokergraph
