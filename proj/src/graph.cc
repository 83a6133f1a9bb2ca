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

#include "brokergraph/graph.h"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace brokergraph {

AdornedGraph AdornedGraph::from_edges(size_t n, const std::vector<Edge> &edges) {
    AdornedGraph g(n);
    for (auto [a, b] : edges) {
        if (g.has_edge(a, b)) throw std::invalid_argument("duplicate edge");
        g.add_edge(a, b);
    }
    return g;
}

void AdornedGraph::check_pair(size_t a, size_t b) const {
    if (a >= num_vertices() || b >= num_vertices()) throw std::out_of_range("vertex out of range");
    if (a == b) throw std::invalid_argument("self loops are not allowed");
}

void AdornedGraph::add_edge(size_t a, size_t b) {
    check_pair(a, b);
    adjacency_[a].set(b, true);
    adjacency_[b].set(a, true);
}

void AdornedGraph::remove_edge(size_t a, size_t b) {
    check_pair(a, b);
    adjacency_[a].set(b, false);
    adjacency_[b].set(a, false);
}

void AdornedGraph::toggle_edge(size_t a, size_t b) {
    check_pair(a, b);
    adjacency_[a].flip(b);
    adjacency_[b].flip(a);
}

void AdornedGraph::isolate(size_t a) {
    for (size_t b : neighbors(a)) remove_edge(a, b);
}

std::vector<size_t> AdornedGraph::neighbors(size_t a) const {
    std::vector<size_t> out;
    for (size_t b = 0; b < num_vertices(); b++) {
        if (adjacency_[a][b]) out.push_back(b);
    }
    return out;
}

std::vector<Edge> AdornedGraph::edges() const {
    std::vector<Edge> out;
    for (size_t a = 0; a < num_vertices(); a++) {
        for (size_t b = a + 1; b < num_vertices(); b++) {
            if (adjacency_[a][b]) out.emplace_back(a, b);
        }
    }
    return out;
}

size_t AdornedGraph::num_edges() const {
    size_t twice = 0;
    for (const auto &row : adjacency_) twice += row.popcount();
    return twice / 2;
}

bool AdornedGraph::has_identity_byproducts() const {
    for (const auto &c : byproducts_) {
        if (!c.is_identity()) return false;
    }
    return true;
}

void AdornedGraph::clear_byproducts() {
    for (auto &c : byproducts_) c = LocalClifford::identity();
}

std::string AdornedGraph::str() const {
    std::ostringstream out;
    out << "n=" << num_vertices() << " edges={";
    bool first = true;
    for (auto [a, b] : edges()) {
        out << (first ? "" : " ") << a << '-' << b;
        first = false;
    }
    out << '}';
    for (size_t v = 0; v < num_vertices(); v++) {
        if (!byproducts_[v].is_identity()) out << " C" << v << "=[" << byproducts_[v].str() << ']';
    }
    return out.str();
}

Tableau graph_stabilizers(const AdornedGraph &graph) {
    size_t n = graph.num_vertices();
    std::vector<PauliString> stabilizers, destabilizers;
    for (size_t a = 0; a < n; a++) {
        PauliString k(n);
        k.set_x(a, true);
        for (size_t b : graph.neighbors(a)) k.set_z(b, true);
        stabilizers.push_back(std::move(k));
        destabilizers.push_back(PauliString::single(n, a, 'Z'));
    }
    Tableau t = Tableau::from_rows(std::move(stabilizers), std::move(destabilizers));
    for (size_t v = 0; v < n; v++) graph.byproduct(v).apply_to(t, v);
    return t;
}

AdornedGraph extract_graph(const Tableau &state) {
    size_t n = state.num_qubits();
    std::vector<PauliString> rows = state.stabilizers();
    auto apply = [&](Gate g, size_t q) {
        for (auto &r : rows) conjugate_by_gate(r, g, q);
    };

    std::vector<size_t> x_cols(n);
    for (size_t q = 0; q < n; q++) x_cols[q] = q;
    auto x_pivots = row_reduce(rows, x_cols, 0);

    // Rows below the X pivots are Z-only and have full rank on the non-pivot
    // qubits; Hadamards there make the X block invertible.
    std::vector<bool> is_pivot(n, false);
    for (size_t c : x_pivots) is_pivot[c] = true;
    std::vector<size_t> free_z_cols;
    for (size_t q = 0; q < n; q++) {
        if (!is_pivot[q]) free_z_cols.push_back(n + q);
    }
    auto z_pivots = row_reduce(rows, free_z_cols, x_pivots.size());
    if (x_pivots.size() + z_pivots.size() != n) throw std::logic_error("extract_graph: rank deficient tableau");

    std::vector<bool> hadamard(n, false), phase_dag(n, false), flip(n, false);
    for (size_t c : z_pivots) {
        hadamard[c - n] = true;
        apply(Gate::kH, c - n);
    }

    auto pivots = row_reduce(rows, x_cols, 0);
    if (pivots.size() != n) throw std::logic_error("extract_graph: X block not invertible");
    // row q now carries X (or Y) on exactly qubit q.

    for (size_t q = 0; q < n; q++) {
        if (rows[q].z(q)) {
            phase_dag[q] = true;
            apply(Gate::kSDag, q);
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (rows[q].sign() < 0) {
            flip[q] = true;
            apply(Gate::kZ, q);
        }
    }

    AdornedGraph g(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rows[a].z(b) != rows[b].z(a)) throw std::logic_error("extract_graph: asymmetric Z block");
            if (rows[a].z(b)) g.add_edge(a, b);
        }
    }
    // The local map U = Z^flip S_dag^phase H^hadamard (H first) takes the state
    // to |G>, so the byproduct is its inverse.
    for (size_t q = 0; q < n; q++) {
        LocalClifford u = LocalClifford::identity();
        if (hadamard[q]) u = u.then(LocalClifford::from_gate(Gate::kH));
        if (phase_dag[q]) u = u.then(LocalClifford::from_gate(Gate::kSDag));
        if (flip[q]) u = u.then(LocalClifford::from_gate(Gate::kZ));
        g.set_byproduct(q, u.inverse());
    }
    return g;
}

AdornedGraph local_complement(const AdornedGraph &graph, size_t v) {
    if (v >= graph.num_vertices()) throw std::out_of_range("vertex out of range");
    // |tau_v(G)> = U |G> with U_v: X->X, Z->Y and U_b = S on each neighbour.
    static const LocalClifford kCenterInverse =
        LocalClifford::from_images({true, false, 0}, {true, true, 0}).inverse();
    static const LocalClifford kNeighbourInverse = LocalClifford::from_gate(Gate::kS).inverse();

    AdornedGraph out = graph;
    auto nbrs = graph.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); i++) {
        for (size_t j = i + 1; j < nbrs.size(); j++) out.toggle_edge(nbrs[i], nbrs[j]);
    }
    out.set_byproduct(v, kCenterInverse.then(graph.byproduct(v)));
    for (size_t b : nbrs) out.set_byproduct(b, kNeighbourInverse.then(graph.byproduct(b)));
    return out;
}

namespace {

std::string adjacency_key(const AdornedGraph &g) {
    std::string key;
    for (const auto &row : g.adjacency()) {
        for (auto w : row.words()) key.append(reinterpret_cast<const char *>(&w), sizeof(w));
    }
    return key;
}

}  // namespace

std::optional<AdornedGraph> align_to_shape(const AdornedGraph &graph, const AdornedGraph &shape, size_t max_orbit) {
    if (graph.num_vertices() != shape.num_vertices()) return std::nullopt;
    if (graph.same_graph(shape)) return graph;
    std::unordered_map<std::string, bool> seen;
    std::deque<AdornedGraph> frontier;
    seen.emplace(adjacency_key(graph), true);
    frontier.push_back(graph);
    while (!frontier.empty()) {
        AdornedGraph cur = std::move(frontier.front());
        frontier.pop_front();
        for (size_t v = 0; v < cur.num_vertices(); v++) {
            if (cur.degree(v) < 2) continue;  // no edges to toggle
            AdornedGraph next = local_complement(cur, v);
            if (next.same_graph(shape)) return next;
            if (seen.emplace(adjacency_key(next), true).second) {
                if (seen.size() > max_orbit) return std::nullopt;
                frontier.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

bool lc_equivalent(const Tableau &state, const AdornedGraph &shape) {
    return align_to_shape(extract_graph(state), shape).has_value();
}

}  // namespace brokergraph
