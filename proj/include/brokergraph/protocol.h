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

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "brokergraph/events.h"
#include "brokergraph/graph.h"
#include "brokergraph/tableau.h"
#include "brokergraph/timing.h"

namespace brokergraph {

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);
/// Seed of trial `index` in a run seeded with `base_seed`.
uint64_t trial_seed(uint64_t base_seed, uint64_t index);

/// Per-trial randomness. Scripted values are consumed before the generator,
/// which lets tests force herald results and measurement branches.
class Entropy {
   public:
    explicit Entropy(uint64_t seed) : engine_(seed) {}

    /// True with probability p.
    bool herald(double p);
    /// Uniform bit for a random measurement outcome (true means -1).
    bool coin();

    void script_heralds(const std::vector<bool> &values) { heralds_.insert(heralds_.end(), values.begin(), values.end()); }
    void script_coins(const std::vector<bool> &values) { coins_.insert(coins_.end(), values.begin(), values.end()); }
    size_t pending_coins() const { return coins_.size(); }

   private:
    std::mt19937_64 engine_;
    std::deque<bool> heralds_;
    std::deque<bool> coins_;
};

enum class BrokerStatus { kFree, kInFragment, kJustMeasured };
enum class ClientStatus { kIdle, kInGraph };

struct PhysicalNode {
    NodeId id = 0;
    size_t broker = 0;
    size_t client = 0;
    BrokerStatus broker_status = BrokerStatus::kFree;
    std::optional<FragmentId> fragment;
    ClientStatus client_status = ClientStatus::kIdle;
};

enum class FragmentStatus { kBuilding, kComplete, kDamaged, kMerged, kConsumed };

struct Fragment {
    FragmentId id = 0;
    std::vector<NodeId> members;
    AdornedGraph shape;  // over member positions
    FragmentStatus status = FragmentStatus::kBuilding;
    /// Local corrections relating the brokers' state to `shape` once Complete.
    std::vector<LocalClifford> broker_byproducts;
};

enum class HeraldOutcome { kSuccess, kFailure };

struct HeraldedResult {
    HeraldOutcome outcome = HeraldOutcome::kFailure;
    Nanos elapsed = 0;
    FragmentId fragment = 0;
};

/// A fresh attempt pays preparation, the optical attempt and herald
/// detection; a fusion attempt joins brokers already inside one fragment
/// and pays only the optical attempt.
enum class AttemptKind { kFresh, kFusion };

/// How the two stage-one pairs of a star are charged in simulated time.
enum class ParallelMode { kPaperApprox, kExact };

/// Local simulated clock of one activity.
struct Clock {
    Nanos now = 0;
};

struct BellBuild {
    FragmentId fragment = 0;
    size_t attempts = 0;
    size_t failures = 0;
    Nanos elapsed = 0;
};

struct StarBuild {
    FragmentId fragment = 0;
    size_t attempts = 0;
    size_t failures = 0;
    Nanos elapsed = 0;
    size_t outer_repetitions = 0;
    /// Attempt rounds charged to stage one, one entry per repetition.
    std::vector<size_t> stage1_rounds;
};

struct TransferReport {
    FragmentId fragment = 0;
    std::vector<NodeId> members;
    /// Broker measurement outcomes (+1/-1), in member order.
    std::vector<int> outcomes;
    /// Clients whose non-diagonal byproduct was undone before the transfer.
    std::vector<NodeId> normalized_clients;
    Nanos elapsed = 0;
};

enum class ReadoutBasis { kX, kY, kZ };

struct ReadoutResult {
    int outcome = 1;  // graph-frame eigenvalue, byproduct already accounted for
    Nanos elapsed = 0;
};

class RetryCapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One mutation of the network's quantum state, for replay on another
/// simulator. kReset records the Z outcome seen before re-preparing |+>.
struct TraceStep {
    enum class Kind { kGate, kProject, kReset };
    Kind kind = Kind::kGate;
    Gate gate = Gate::kH;
    size_t a = 0;
    size_t b = 0;
    PauliString op;
    int outcome = 1;
};

/// Test hook: deliberately wrong byproduct bookkeeping.
struct FaultInjection {
    bool drop_transfer_corrections = false;
};

/// The broker/client register of a set of physical nodes together with the
/// exact stabilizer state of all 2N qubits. Node i owns broker qubit 2i and
/// client qubit 2i+1.
///
/// Clients are described by `client_graph()`: the client state is
/// (prod_v C_v) |G> over client qubits, where G is the registry graph and
/// C_v the per-client byproduct. Idle clients are isolated |+> vertices with
/// identity byproduct.
class BrokerNetwork {
   public:
    BrokerNetwork(size_t num_nodes, TimingProfile profile, uint64_t seed);

    size_t num_nodes() const { return nodes_.size(); }
    const PhysicalNode &node(NodeId id) const { return nodes_.at(id); }
    const Fragment &fragment(FragmentId id) const { return fragments_.at(id); }
    const Tableau &state() const { return state_; }
    const TimingProfile &profile() const { return profile_; }
    const AdornedGraph &client_graph() const { return client_graph_; }
    Entropy &entropy() { return entropy_; }

    void set_event_sink(EventSink sink) { sink_ = std::move(sink); }
    void set_retry_cap(std::optional<size_t> cap) { retry_cap_ = cap; }
    void set_fault_injection(FaultInjection f) { faults_ = f; }
    /// Appends every later state mutation to `trace` (nullptr stops tracing).
    void set_trace(std::vector<TraceStep> *trace) { trace_ = trace; }

    /// Resets a Free or JustMeasured broker to |+> and marks it Free.
    void prepare_broker(NodeId id);

    /// One heralded parity projection between two brokers. Free brokers are
    /// first gathered into a new edge fragment; otherwise both must sit in the
    /// same Building fragment. Success postselects Z_a Z_b = -1. Failure
    /// measures both brokers, damages every Building fragment holding them
    /// and resets its brokers.
    HeraldedResult attempt_entangle(NodeId a, NodeId b, Clock &clock, AttemptKind kind = AttemptKind::kFresh);

    /// Repeats fresh attempts until an edge fragment completes.
    BellBuild build_bell(NodeId a, NodeId b, Clock &clock);

    /// Two Bell pairs (n0,n1) and (n2,n3), then a fusion attempt on (n1,n2);
    /// a failed fusion discards all four brokers and restarts. The result is
    /// a star centred on n0.
    StarBuild build_star4(const std::array<NodeId, 4> &nodes, Clock &clock, ParallelMode mode = ParallelMode::kExact);

    /// CZ(broker, client) then X measurement of each member broker.
    TransferReport transfer_naive(FragmentId id, Clock &clock);
    /// CNOT(client -> broker) then Z measurement of each member broker.
    TransferReport transfer_optimized(FragmentId id, Clock &clock);

    /// Swaps the client out through a freshly prepared broker, measures it in
    /// the requested graph-frame basis and leaves a fresh |+> client behind.
    ReadoutResult readout_client(NodeId id, ReadoutBasis basis, Clock &clock);

    /// Clients 0..target.n-1 hold graph_stabilizers(target) once the
    /// recorded byproducts are applied.
    bool verify_clients(const AdornedGraph &target) const;

    /// Canonical generators of the clients' reduced state (empty when the
    /// clients are momentarily entangled with brokers).
    std::vector<PauliString> client_snapshot() const;

    /// Checks a Complete fragment's brokers against its shape and byproducts.
    bool verify_fragment(FragmentId id) const;

   private:
    FragmentId open_fragment(std::vector<NodeId> members, AdornedGraph shape);
    void complete_fragment(FragmentId id);
    void damage_fragment(FragmentId id, Nanos at);
    void reset_broker(NodeId id);
    int measure(const PauliString &op);
    void gate(Gate g, size_t a, size_t b = 0);
    void apply_local(const LocalClifford &c, size_t q);
    void project(const PauliString &op, int outcome);
    void emit(Nanos at, EventKind kind, std::vector<NodeId> nodes, std::optional<FragmentId> fragment);
    void check_retry(size_t attempts) const;
    std::vector<size_t> broker_qubits(const std::vector<NodeId> &members) const;
    void undo_broker_byproducts(const Fragment &f);
    void normalize_client(NodeId id, bool keep_diagonal, TransferReport &report);
    void finish_transfer(Fragment &f, TransferReport &report, Clock &clock);

    std::vector<PhysicalNode> nodes_;
    std::vector<Fragment> fragments_;
    Tableau state_;
    TimingProfile profile_;
    Entropy entropy_;
    std::mt19937_64 reset_rng_;
    AdornedGraph client_graph_;
    EventSink sink_;
    std::optional<size_t> retry_cap_;
    FaultInjection faults_;
    std::vector<TraceStep> *trace_ = nullptr;
};

}  // namespace brokergraph
