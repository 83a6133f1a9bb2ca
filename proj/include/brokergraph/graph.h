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
#include <utility>
#include <vector>

#include "brokergraph/bit_vector.h"
#include "brokergraph/local_clifford.h"
#include "brokergraph/tableau.h"

namespace brokergraph {

using Edge = std::pair<size_t, size_t>;

/// Simple undirected graph with a local Clifford byproduct on every vertex.
/// Describes the state (C_0 (x) ... (x) C_{n-1}) |G>.
class AdornedGraph {
   public:
    AdornedGraph() = default;
    explicit AdornedGraph(size_t n) : adjacency_(n, BitVector(n)), byproducts_(n) {}
    static AdornedGraph from_edges(size_t n, const std::vector<Edge> &edges);

    size_t num_vertices() const { return adjacency_.size(); }

    bool has_edge(size_t a, size_t b) const { return adjacency_[a][b]; }
    void add_edge(size_t a, size_t b);
    void remove_edge(size_t a, size_t b);
    void toggle_edge(size_t a, size_t b);
    void isolate(size_t a);

    std::vector<size_t> neighbors(size_t a) const;
    size_t degree(size_t a) const { return adjacency_[a].popcount(); }
    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<Edge> edges() const;
    size_t num_edges() const;

    const LocalClifford &byproduct(size_t v) const { return byproducts_[v]; }
    void set_byproduct(size_t v, const LocalClifford &c) { byproducts_[v] = c; }
    bool has_identity_byproducts() const;
    void clear_byproducts();

    bool same_graph(const AdornedGraph &other) const { return adjacency_ == other.adjacency_; }
    const std::vector<BitVector> &adjacency() const { return adjacency_; }

    std::string str() const;

    bool operator==(const AdornedGraph &other) const = default;

   private:
    void check_pair(size_t a, size_t b) const;

    std::vector<BitVector> adjacency_;
    std::vector<LocalClifford> byproducts_;
};

/// Stabilizer tableau of the adorned graph state: generators
/// K_a = X_a prod_{b in N(a)} Z_b conjugated by the byproducts.
Tableau graph_stabilizers(const AdornedGraph &graph);

/// Graph plus byproducts reproducing `state` exactly. Pivoting runs in
/// ascending qubit order, so the result is a deterministic function of the
/// stabilizer group.
AdornedGraph extract_graph(const Tableau &state);

/// Local complementation at `v`: toggles every edge inside N(v) and adjusts
/// the byproducts so the described state is unchanged.
AdornedGraph local_complement(const AdornedGraph &graph, size_t v);

/// Re-expresses `graph` (same state) over the adjacency of `shape` by
/// searching its local-complementation orbit. nullopt when the shape is not
/// local-Clifford equivalent or the orbit exceeds `max_orbit` graphs.
std::optional<AdornedGraph> align_to_shape(const AdornedGraph &graph, const AdornedGraph &shape,
                                           size_t max_orbit = 200000);

/// True when `state` is local-Clifford equivalent to the graph state of `shape`.
bool lc_equivalent(const Tableau &state, const AdornedGraph &shape);

}  // namespace brokergraph
