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

#include "brokergraph/planner.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brokergraph {

std::vector<Edge> Blueprint::target_edges() const {
    std::vector<Edge> out;
    auto sorted = [](NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    if (kind == BlueprintKind::kEdge) {
        out.push_back(sorted(nodes.at(0), nodes.at(1)));
    } else {
        for (size_t i = 1; i < 4; i++) out.push_back(sorted(nodes.at(0), nodes.at(i)));
    }
    return out;
}

std::string Blueprint::str() const {
    std::ostringstream out;
    out << (kind == BlueprintKind::kEdge ? "edge(" : "star4(");
    for (size_t i = 0; i < nodes.size(); i++) out << (i ? "," : "") << nodes[i];
    out << ')';
    return out.str();
}

size_t BuildPlan::num_fragments() const {
    size_t n = 0;
    for (const auto &r : rounds) n += r.size();
    return n;
}

std::string BuildPlan::str() const {
    std::ostringstream out;
    out << "strategy " << strategy_name(strategy) << ", " << target.num_vertices() << " vertices, "
        << target.num_edges() << " edges, " << rounds.size() << " rounds\n";
    for (size_t i = 0; i < rounds.size(); i++) {
        out << "round " << i << ':';
        for (const auto &b : rounds[i]) out << ' ' << b.str();
        out << '\n';
    }
    return out.str();
}

BuildPlan plan_growth(const AdornedGraph &target, Strategy strategy, size_t num_nodes) {
    if (target.num_vertices() > num_nodes) {
        throw std::invalid_argument("target has " + std::to_string(target.num_vertices()) + " vertices but only " +
                                    std::to_string(num_nodes) + " nodes are registered");
    }
    BuildPlan plan;
    plan.target = target;
    plan.target.clear_byproducts();
    plan.strategy = strategy;

    std::vector<Blueprint> order;
    std::set<Edge> unbuilt;
    for (const auto &e : target.edges()) unbuilt.insert(e);

    if (strategy == Strategy::kMultipartiteStar) {
        for (size_t v = 0; v < target.num_vertices(); v++) {
            if (target.degree(v) != 3) continue;
            auto leaves = target.neighbors(v);
            bool free = std::all_of(leaves.begin(), leaves.end(), [&](size_t u) {
                return unbuilt.count(u < v ? Edge{u, v} : Edge{v, u}) != 0;
            });
            if (!free) continue;
            Blueprint b{BlueprintKind::kStar4, {v, leaves[0], leaves[1], leaves[2]}};
            for (const auto &e : b.target_edges()) unbuilt.erase(e);
            order.push_back(std::move(b));
        }
    }
    for (const auto &e : unbuilt) order.push_back(Blueprint{BlueprintKind::kEdge, {e.first, e.second}});

    std::vector<std::set<NodeId>> busy;
    for (auto &b : order) {
        size_t r = 0;
        for (; r < plan.rounds.size(); r++) {
            bool clash = std::any_of(b.nodes.begin(), b.nodes.end(), [&](NodeId n) { return busy[r].count(n) != 0; });
            if (!clash) break;
        }
        if (r == plan.rounds.size()) {
            plan.rounds.emplace_back();
            busy.emplace_back();
        }
        busy[r].insert(b.nodes.begin(), b.nodes.end());
        plan.rounds[r].push_back(std::move(b));
    }
    return plan;
}

std::optional<std::string> check_plan(const BuildPlan &plan) {
    std::multiset<Edge> covered;
    size_t n = plan.target.num_vertices();
    for (size_t r = 0; r < plan.rounds.size(); r++) {
        std::set<NodeId> busy;
        for (const auto &b : plan.rounds[r]) {
            size_t want = b.kind == BlueprintKind::kEdge ? 2 : 4;
            if (b.nodes.size() != want) return "round " + std::to_string(r) + ": " + b.str() + " has wrong arity";
            for (NodeId v : b.nodes) {
                if (v >= n) return "round " + std::to_string(r) + ": node " + std::to_string(v) + " outside target";
                if (!busy.insert(v).second) {
                    return "round " + std::to_string(r) + ": node " + std::to_string(v) + " used twice";
                }
            }
            for (const auto &e : b.target_edges()) covered.insert(e);
        }
    }
    auto edges = plan.target.edges();
    std::multiset<Edge> expected(edges.begin(), edges.end());
    if (covered != expected) return std::string("fragments do not cover the target edges exactly once");
    return std::nullopt;
}

bool same_schedule(const BuildPlan &a, const BuildPlan &b) {
    return a.target.same_graph(b.target) && a.rounds == b.rounds;
}

}  // namespace brokergraph
