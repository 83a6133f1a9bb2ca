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
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "brokergraph/pauli_string.h"

namespace brokergraph {

enum class Basis { kAllZero, kAllPlus };

enum class Gate { kH, kS, kSDag, kX, kY, kZ, kCZ, kCNOT };

/// Result of a postselected projection.
enum class Projection { kOk, kImpossibleOutcome };

/// Conjugates a single Pauli string by a Clifford gate, P -> G P G^dagger.
void conjugate_by_gate(PauliString &p, Gate gate, size_t a, size_t b = 0);

/// Exact n-qubit stabilizer state kept as stabilizer rows plus paired
/// destabilizer rows (destabilizer i anticommutes with stabilizer i and
/// commutes with every other row of either kind).
class Tableau {
   public:
    static Tableau new_state(size_t num_qubits, Basis basis);

    /// Builds a tableau from a commuting, independent, Hermitian generator
    /// list. Destabilizers are derived. Throws std::invalid_argument when the
    /// generators do not describe a pure stabilizer state.
    static Tableau from_stabilizers(std::vector<PauliString> stabilizers);

    /// Trusted construction from explicit rows; validated with
    /// check_invariants().
    static Tableau from_rows(std::vector<PauliString> stabilizers, std::vector<PauliString> destabilizers);

    size_t num_qubits() const { return stabilizers_.size(); }
    const std::vector<PauliString> &stabilizers() const { return stabilizers_; }
    const std::vector<PauliString> &destabilizers() const { return destabilizers_; }

    void apply_gate(Gate gate, std::span<const size_t> qubits);
    void apply_gate(Gate gate, std::initializer_list<size_t> qubits) {
        apply_gate(gate, std::span<const size_t>(qubits.begin(), qubits.size()));
    }
    void h(size_t q) { conjugate_all(Gate::kH, q); }
    void s(size_t q) { conjugate_all(Gate::kS, q); }
    void s_dag(size_t q) { conjugate_all(Gate::kSDag, q); }
    void x(size_t q) { conjugate_all(Gate::kX, q); }
    void y(size_t q) { conjugate_all(Gate::kY, q); }
    void z(size_t q) { conjugate_all(Gate::kZ, q); }
    void cz(size_t a, size_t b) { apply_gate(Gate::kCZ, {a, b}); }
    void cnot(size_t control, size_t target) { apply_gate(Gate::kCNOT, {control, target}); }

    /// +1/-1 if the outcome of measuring `op` is already determined, nullopt
    /// if it is uniformly random.
    std::optional<int> deterministic_outcome(const PauliString &op) const;

    /// Measures a Hermitian Pauli observable, returning +1 or -1.
    int measure(const PauliString &op, std::mt19937_64 &rng);

    /// Postselects the `desired` (+1/-1) eigenspace of `op`.
    [[nodiscard]] Projection project_onto(const PauliString &op, int desired);

    /// Measures Z on `q` and flips it back to |0>, then rotates into |+> if
    /// requested. Returns the Z outcome seen before the reset.
    int reset(size_t q, Basis basis, std::mt19937_64 &rng);

    /// Empty when all invariants hold, otherwise a description of the first
    /// violation.
    std::optional<std::string> check_invariants() const;

    std::string str() const;

   private:
    Tableau() = default;
    void conjugate_all(Gate gate, size_t a, size_t b = 0);
    void collapse_random(const PauliString &op, size_t pivot, int outcome);
    std::optional<size_t> anticommuting_stabilizer(const PauliString &op) const;
    static void check_hermitian(const PauliString &op, size_t n);

    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
};

/// Reduced row echelon form of the signed group generated by `generators`
/// (column order x_0..x_{n-1}, z_0..z_{n-1}). Two generator sets produce the
/// same list iff they generate the same signed Pauli group.
std::vector<PauliString> canonical_generators(std::vector<PauliString> generators);

bool groups_equal(const Tableau &a, const Tableau &b);

/// State of the qubits in `subset` (in the given order) when that subset is
/// unentangled with the rest; nullopt when the reduced state is mixed.
std::optional<Tableau> reduced_state(const Tableau &state, std::span<const size_t> subset);

/// Gauss-Jordan elimination over the given (x|z) columns (k < n is x_k,
/// otherwise z_{k-n}) starting at `first_row`. Returns the pivot column of
/// each pivot row, in row order.
std::vector<size_t> row_reduce(std::vector<PauliString> &rows, std::span<const size_t> columns, size_t first_row = 0);

/// GF(2) rank of the generators' (x|z) matrix.
size_t symplectic_rank(std::vector<PauliString> rows);

}  // namespace brokergraph
