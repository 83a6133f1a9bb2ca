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

#include "brokergraph/protocol.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace brokergraph {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t base_seed, uint64_t index) {
    return mix64(mix64(base_seed) ^ index);
}

bool Entropy::herald(double p) {
    if (!heralds_.empty()) {
        bool v = heralds_.front();
        heralds_.pop_front();
        return v;
    }
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
}

bool Entropy::coin() {
    if (!coins_.empty()) {
        bool v = coins_.front();
        coins_.pop_front();
        return v;
    }
    return (engine_() >> 63) != 0;
}

namespace {

LocalClifford pauli_z() {
    static const LocalClifford z = LocalClifford::from_gate(Gate::kZ);
    return z;
}

PauliString signed_single(size_t n, size_t q, SignedPauli p) {
    PauliString out(n);
    out.set_x(q, p.x);
    out.set_z(q, p.z);
    out.set_phase(p.phase);
    return out;
}

}  // namespace

BrokerNetwork::BrokerNetwork(size_t num_nodes, TimingProfile profile, uint64_t seed)
    : state_(Tableau::new_state(2 * num_nodes, Basis::kAllPlus)),
      profile_(profile),
      entropy_(seed),
      reset_rng_(mix64(seed ^ 0x5bd1e995ULL)),
      client_graph_(num_nodes) {
    if (num_nodes == 0) throw std::invalid_argument("network needs at least one node");
    profile_.validate();
    nodes_.resize(num_nodes);
    for (size_t i = 0; i < num_nodes; i++) {
        nodes_[i].id = i;
        nodes_[i].broker = 2 * i;
        nodes_[i].client = 2 * i + 1;
    }
}

void BrokerNetwork::emit(Nanos at, EventKind kind, std::vector<NodeId> nodes, std::optional<FragmentId> fragment) {
    if (sink_) sink_(Event{at, kind, std::move(nodes), fragment});
}

void BrokerNetwork::check_retry(size_t attempts) const {
    if (retry_cap_ && attempts >= *retry_cap_) {
        throw RetryCapExceeded("retry cap of " + std::to_string(*retry_cap_) + " attempts exceeded");
    }
}

void BrokerNetwork::gate(Gate g, size_t a, size_t b) {
    if (g == Gate::kCZ || g == Gate::kCNOT) {
        state_.apply_gate(g, {a, b});
    } else {
        state_.apply_gate(g, {a});
    }
    if (trace_) trace_->push_back(TraceStep{TraceStep::Kind::kGate, g, a, b, {}, 1});
}

void BrokerNetwork::apply_local(const LocalClifford &c, size_t q) {
    for (Gate g : c.gates()) gate(g, q);
}

void BrokerNetwork::project(const PauliString &op, int outcome) {
    if (state_.project_onto(op, outcome) != Projection::kOk) throw std::logic_error("projection onto impossible outcome");
    if (trace_) trace_->push_back(TraceStep{TraceStep::Kind::kProject, Gate::kH, 0, 0, op, outcome});
}

int BrokerNetwork::measure(const PauliString &op) {
    int outcome;
    if (auto known = state_.deterministic_outcome(op)) {
        outcome = *known;
    } else {
        outcome = entropy_.coin() ? -1 : +1;
    }
    project(op, outcome);
    return outcome;
}

std::vector<size_t> BrokerNetwork::broker_qubits(const std::vector<NodeId> &members) const {
    std::vector<size_t> qs;
    qs.reserve(members.size());
    for (NodeId m : members) qs.push_back(nodes_.at(m).broker);
    return qs;
}

void BrokerNetwork::reset_broker(NodeId id) {
    PhysicalNode &n = nodes_.at(id);
    int z = state_.reset(n.broker, Basis::kAllPlus, reset_rng_);
    if (trace_) trace_->push_back(TraceStep{TraceStep::Kind::kReset, Gate::kH, n.broker, 0, {}, z});
    n.broker_status = BrokerStatus::kFree;
    n.fragment.reset();
}

void BrokerNetwork::prepare_broker(NodeId id) {
    const PhysicalNode &n = nodes_.at(id);
    if (n.broker_status == BrokerStatus::kInFragment) {
        throw std::logic_error("broker of node " + std::to_string(id) + " belongs to a fragment");
    }
    reset_broker(id);
}

FragmentId BrokerNetwork::open_fragment(std::vector<NodeId> members, AdornedGraph shape) {
    Fragment f;
    f.id = fragments_.size();
    f.members = std::move(members);
    f.shape = std::move(shape);
    f.status = FragmentStatus::kBuilding;
    for (NodeId m : f.members) {
        nodes_.at(m).broker_status = BrokerStatus::kInFragment;
        nodes_.at(m).fragment = f.id;
    }
    fragments_.push_back(std::move(f));
    return fragments_.back().id;
}

void BrokerNetwork::complete_fragment(FragmentId id) {
    Fragment &f = fragments_.at(id);
    auto qs = broker_qubits(f.members);
    auto reduced = reduced_state(state_, qs);
    if (!reduced) throw std::logic_error("fragment brokers are entangled with other qubits");
    auto aligned = align_to_shape(extract_graph(*reduced), f.shape);
    if (!aligned) throw std::logic_error("fragment state is not equivalent to its shape");
    f.broker_byproducts.clear();
    for (size_t i = 0; i < f.members.size(); i++) f.broker_byproducts.push_back(aligned->byproduct(i));
    f.status = FragmentStatus::kComplete;
}

void BrokerNetwork::damage_fragment(FragmentId id, Nanos at) {
    Fragment &f = fragments_.at(id);
    f.status = FragmentStatus::kDamaged;
    for (NodeId m : f.members) {
        if (nodes_.at(m).fragment == id) reset_broker(m);
    }
    emit(at, EventKind::kFragmentDamaged, f.members, id);
}

HeraldedResult BrokerNetwork::attempt_entangle(NodeId a, NodeId b, Clock &clock, AttemptKind kind) {
    if (a == b) throw std::invalid_argument("cannot entangle a broker with itself");
    PhysicalNode &na = nodes_.at(a);
    PhysicalNode &nb = nodes_.at(b);

    FragmentId fid;
    bool fresh_edge = false;
    if (na.broker_status != BrokerStatus::kInFragment && nb.broker_status != BrokerStatus::kInFragment) {
        prepare_broker(a);
        prepare_broker(b);
        fid = open_fragment({a, b}, AdornedGraph::from_edges(2, {{0, 1}}));
        fresh_edge = true;
    } else if (na.fragment && na.fragment == nb.fragment &&
               fragments_.at(*na.fragment).status == FragmentStatus::kBuilding) {
        fid = *na.fragment;
    } else {
        throw std::logic_error("brokers are neither free nor in a common building fragment");
    }

    Nanos elapsed = kind == AttemptKind::kFresh ? profile_.attempt_ns() : profile_.tau_o;
    Nanos start = clock.now;
    emit(start, EventKind::kAttemptStarted, {a, b}, fid);
    clock.now += elapsed;

    HeraldedResult result;
    result.elapsed = elapsed;
    result.fragment = fid;
    size_t n = state_.num_qubits();
    if (entropy_.herald(profile_.p)) {
        PauliString zz = PauliString::two(n, na.broker, 'Z', nb.broker, 'Z');
        project(zz, -1);
        result.outcome = HeraldOutcome::kSuccess;
        emit(clock.now, EventKind::kHeraldSuccess, {a, b}, fid);
        if (fresh_edge) {
            complete_fragment(fid);
            emit(clock.now, EventKind::kFragmentComplete, {a, b}, fid);
        }
    } else {
        result.outcome = HeraldOutcome::kFailure;
        emit(clock.now, EventKind::kHeraldFailure, {a, b}, fid);
        damage_fragment(fid, clock.now);
    }
    return result;
}

BellBuild BrokerNetwork::build_bell(NodeId a, NodeId b, Clock &clock) {
    BellBuild out;
    Nanos start = clock.now;
    while (true) {
        check_retry(out.attempts);
        HeraldedResult r = attempt_entangle(a, b, clock, AttemptKind::kFresh);
        out.attempts++;
        if (r.outcome == HeraldOutcome::kSuccess) {
            out.fragment = r.fragment;
            break;
        }
        out.failures++;
    }
    out.elapsed = clock.now - start;
    return out;
}

StarBuild BrokerNetwork::build_star4(const std::array<NodeId, 4> &nodes, Clock &clock, ParallelMode mode) {
    for (size_t i = 0; i < 4; i++) {
        if (nodes[i] >= nodes_.size()) throw std::invalid_argument("star node out of range");
        for (size_t j = i + 1; j < 4; j++) {
            if (nodes[i] == nodes[j]) throw std::invalid_argument("star needs four distinct nodes");
        }
    }
    StarBuild out;
    Nanos start = clock.now;
    while (true) {
        check_retry(out.outer_repetitions);
        out.outer_repetitions++;

        Clock clock_a{clock.now};
        BellBuild pa = build_bell(nodes[0], nodes[1], clock_a);
        Clock clock_b{clock.now};
        BellBuild pb;
        if (mode == ParallelMode::kPaperApprox) {
            Nanos stage_end = clock_a.now;
            EventSink outer = sink_;
            if (outer) {
                sink_ = [&outer, stage_end](const Event &e) {
                    Event c = e;
                    c.timestamp_ns = std::min(c.timestamp_ns, stage_end);
                    outer(c);
                };
            }
            try {
                pb = build_bell(nodes[2], nodes[3], clock_b);
            } catch (...) {
                sink_ = outer;
                throw;
            }
            sink_ = outer;
            clock.now = stage_end;
            out.stage1_rounds.push_back(pa.attempts);
        } else {
            pb = build_bell(nodes[2], nodes[3], clock_b);
            clock.now = std::max(clock_a.now, clock_b.now);
            out.stage1_rounds.push_back(std::max(pa.attempts, pb.attempts));
        }
        out.attempts += pa.attempts + pb.attempts;
        out.failures += pa.failures + pb.failures;

        fragments_.at(pa.fragment).status = FragmentStatus::kMerged;
        fragments_.at(pb.fragment).status = FragmentStatus::kMerged;
        std::vector<NodeId> members(nodes.begin(), nodes.end());
        FragmentId fid = open_fragment(members, AdornedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));

        HeraldedResult fusion = attempt_entangle(nodes[1], nodes[2], clock, AttemptKind::kFusion);
        out.attempts++;
        if (fusion.outcome == HeraldOutcome::kSuccess) {
            complete_fragment(fid);
            emit(clock.now, EventKind::kFragmentComplete, members, fid);
            out.fragment = fid;
            break;
        }
        out.failures++;
    }
    out.elapsed = clock.now - start;
    return out;
}

void BrokerNetwork::undo_broker_byproducts(const Fragment &f) {
    for (size_t i = 0; i < f.members.size(); i++) {
        apply_local(f.broker_byproducts[i].inverse(), nodes_.at(f.members[i]).broker);
    }
}

void BrokerNetwork::normalize_client(NodeId id, bool keep_diagonal, TransferReport &report) {
    const LocalClifford &c = client_graph_.byproduct(id);
    if (c.is_identity() || (keep_diagonal && c.is_z_diagonal())) return;
    apply_local(c.inverse(), nodes_.at(id).client);
    client_graph_.set_byproduct(id, LocalClifford::identity());
    report.normalized_clients.push_back(id);
}

void BrokerNetwork::finish_transfer(Fragment &f, TransferReport &report, Clock &clock) {
    for (NodeId m : f.members) {
        PhysicalNode &n = nodes_.at(m);
        n.broker_status = BrokerStatus::kJustMeasured;
        n.fragment.reset();
        n.client_status = ClientStatus::kInGraph;
    }
    f.status = FragmentStatus::kConsumed;
    report.elapsed = profile_.transfer_ns();
    clock.now += report.elapsed;
    emit(clock.now, EventKind::kTransferDone, f.members, f.id);
}

TransferReport BrokerNetwork::transfer_optimized(FragmentId id, Clock &clock) {
    Fragment &f = fragments_.at(id);
    if (f.status != FragmentStatus::kComplete) throw std::logic_error("fragment is not complete");
    TransferReport report;
    report.fragment = id;
    report.members = f.members;

    undo_broker_byproducts(f);
    for (NodeId m : f.members) normalize_client(m, true, report);

    size_t n = state_.num_qubits();
    for (NodeId m : f.members) {
        const PhysicalNode &node = nodes_.at(m);
        gate(Gate::kCNOT, node.client, node.broker);
        report.outcomes.push_back(measure(PauliString::single(n, node.broker, 'Z')));
    }

    // Z-basis outcome m_j leaves Z^{m_j} on every fragment neighbour of j.
    for (const auto &[i, j] : f.shape.edges()) client_graph_.toggle_edge(f.members[i], f.members[j]);
    if (!faults_.drop_transfer_corrections) {
        for (size_t j = 0; j < f.members.size(); j++) {
            if (report.outcomes[j] != -1) continue;
            for (size_t i : f.shape.neighbors(j)) {
                NodeId v = f.members[i];
                client_graph_.set_byproduct(v, pauli_z().then(client_graph_.byproduct(v)));
            }
        }
    }
    finish_transfer(f, report, clock);
    return report;
}

TransferReport BrokerNetwork::transfer_naive(FragmentId id, Clock &clock) {
    Fragment &f = fragments_.at(id);
    if (f.status != FragmentStatus::kComplete) throw std::logic_error("fragment is not complete");
    bool single_edge = f.shape.num_edges() == 1 && f.members.size() == 2;
    if (!single_edge) {
        for (NodeId m : f.members) {
            if (client_graph_.degree(m) != 0) {
                throw std::logic_error("naive transfer of a multi-edge fragment needs fresh clients");
            }
        }
    }
    TransferReport report;
    report.fragment = id;
    report.members = f.members;

    undo_broker_byproducts(f);
    for (NodeId m : f.members) normalize_client(m, false, report);

    size_t n = state_.num_qubits();
    for (NodeId m : f.members) {
        const PhysicalNode &node = nodes_.at(m);
        gate(Gate::kCZ, node.broker, node.client);
    }
    for (NodeId m : f.members) {
        report.outcomes.push_back(measure(PauliString::single(n, nodes_.at(m).broker, 'X')));
    }

    for (const auto &[i, j] : f.shape.edges()) client_graph_.toggle_edge(f.members[i], f.members[j]);
    if (single_edge) {
        for (size_t j = 0; j < 2; j++) {
            if (report.outcomes[j] != -1) continue;
            NodeId v = f.members[1 - j];
            client_graph_.set_byproduct(v, pauli_z().then(client_graph_.byproduct(v)));
        }
    } else {
        // Fresh clients end in H^{(x)} Z^m |F>.
        LocalClifford h = LocalClifford::from_gate(Gate::kH);
        for (size_t j = 0; j < f.members.size(); j++) {
            LocalClifford c = report.outcomes[j] == -1 ? pauli_z().then(h) : h;
            client_graph_.set_byproduct(f.members[j], c);
        }
    }
    finish_transfer(f, report, clock);
    return report;
}

ReadoutResult BrokerNetwork::readout_client(NodeId id, ReadoutBasis basis, Clock &clock) {
    PhysicalNode &node = nodes_.at(id);
    if (node.client_status != ClientStatus::kInGraph) throw std::logic_error("client holds no graph vertex");
    prepare_broker(id);

    // SWAP(broker, client); the middle CNOT targets the client.
    gate(Gate::kCNOT, node.client, node.broker);
    gate(Gate::kCNOT, node.broker, node.client);
    gate(Gate::kCNOT, node.client, node.broker);

    SignedPauli frame_op{basis != ReadoutBasis::kZ, basis != ReadoutBasis::kX, 0};
    SignedPauli physical = client_graph_.byproduct(id).image(frame_op);
    size_t n = state_.num_qubits();
    int outcome = measure(signed_single(n, node.broker, physical));

    // Re-express the registry so the measured operator reads as +-Z on `id`.
    auto nbrs = client_graph_.neighbors(id);
    if (!nbrs.empty()) {
        std::vector<std::vector<size_t>> frames = {{}, {id}, {nbrs[0], id}, {nbrs[0]}, {id, nbrs[0]}, {id, nbrs[0], id}};
        bool found = false;
        for (const auto &seq : frames) {
            AdornedGraph g = client_graph_;
            for (size_t v : seq) g = local_complement(g, v);
            SignedPauli local = g.byproduct(id).inverse().image(physical);
            if (local.x || !local.z) continue;
            int z_outcome = local.phase == 2 ? -outcome : outcome;
            if (z_outcome == -1) {
                for (size_t v : g.neighbors(id)) g.set_byproduct(v, pauli_z().then(g.byproduct(v)));
            }
            g.isolate(id);
            client_graph_ = std::move(g);
            found = true;
            break;
        }
        if (!found) throw std::logic_error("no frame turns the readout into a Z measurement");
    }
    client_graph_.set_byproduct(id, LocalClifford::identity());
    node.client_status = ClientStatus::kIdle;
    node.broker_status = BrokerStatus::kJustMeasured;

    ReadoutResult r;
    r.outcome = outcome;
    r.elapsed = profile_.readout_ns();
    clock.now += r.elapsed;
    emit(clock.now, EventKind::kReadoutDone, {id}, std::nullopt);
    return r;
}

bool BrokerNetwork::verify_clients(const AdornedGraph &target) const {
    size_t k = target.num_vertices();
    if (k > nodes_.size()) return false;
    std::vector<size_t> qs;
    AdornedGraph adorned = target;
    for (size_t v = 0; v < k; v++) {
        qs.push_back(nodes_[v].client);
        adorned.set_byproduct(v, client_graph_.byproduct(v));
    }
    auto reduced = reduced_state(state_, qs);
    if (!reduced) return false;
    return groups_equal(*reduced, graph_stabilizers(adorned));
}

std::vector<PauliString> BrokerNetwork::client_snapshot() const {
    std::vector<size_t> qs;
    for (const auto &n : nodes_) qs.push_back(n.client);
    auto reduced = reduced_state(state_, qs);
    if (!reduced) return {};
    return canonical_generators(reduced->stabilizers());
}

bool BrokerNetwork::verify_fragment(FragmentId id) const {
    const Fragment &f = fragments_.at(id);
    if (f.status != FragmentStatus::kComplete) return false;
    auto reduced = reduced_state(state_, broker_qubits(f.members));
    if (!reduced) return false;
    AdornedGraph adorned = f.shape;
    for (size_t i = 0; i < f.members.size(); i++) adorned.set_byproduct(i, f.broker_byproducts[i]);
    return groups_equal(*reduced, graph_stabilizers(adorned));
}

}  // namespace brokergraph
