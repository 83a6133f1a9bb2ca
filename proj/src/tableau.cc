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

#include "brokergraph/tableau.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace brokergraph {

namespace {

// Column k of the (x|z) matrix: k < n is x_k, otherwise z_{k-n}.
bool column_bit(const PauliString &p, size_t k) {
    size_t n = p.num_qubits();
    return k < n ? p.x(k) : p.z(k - n);
}

std::vector<size_t> all_columns(size_t n) {
    std::vector<size_t> cols(2 * n);
    for (size_t k = 0; k < 2 * n; k++) cols[k] = k;
    return cols;
}

}  // namespace

// Gauss-Jordan over the given columns, starting at row `first_row`. Returns
// the pivot column of each pivot row, rows [first_row, first_row + result.size()).
std::vector<size_t> row_reduce(std::vector<PauliString> &rows, std::span<const size_t> columns, size_t first_row) {
    std::vector<size_t> pivots;
    size_t r = first_row;
    for (size_t col : columns) {
        if (r >= rows.size()) break;
        size_t found = rows.size();
        for (size_t i = r; i < rows.size(); i++) {
            if (column_bit(rows[i], col)) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[r], rows[found]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && column_bit(rows[i], col)) rows[i] *= rows[r];
        }
        pivots.push_back(col);
        r++;
    }
    return pivots;
}

void conjugate_by_gate(PauliString &p, Gate gate, size_t a, size_t b) {
    bool xa = p.x(a), za = p.z(a);
    switch (gate) {
        case Gate::kH:
            if (xa && za) p.negate();
            p.set_x(a, za);
            p.set_z(a, xa);
            break;
        case Gate::kS:
            if (xa && za) p.negate();
            p.set_z(a, za ^ xa);
            break;
        case Gate::kSDag:
            if (xa && !za) p.negate();
            p.set_z(a, za ^ xa);
            break;
        case Gate::kX:
            if (za) p.negate();
            break;
        case Gate::kY:
            if (xa ^ za) p.negate();
            break;
        case Gate::kZ:
            if (xa) p.negate();
            break;
        case Gate::kCNOT: {
            bool xb = p.x(b), zb = p.z(b);
            if (xa && zb && !(xb ^ za)) p.negate();
            p.set_x(b, xb ^ xa);
            p.set_z(a, za ^ zb);
            break;
        }
        case Gate::kCZ:
            conjugate_by_gate(p, Gate::kH, b);
            conjugate_by_gate(p, Gate::kCNOT, a, b);
            conjugate_by_gate(p, Gate::kH, b);
            break;
    }
}

Tableau Tableau::new_state(size_t num_qubits, Basis basis) {
    if (num_qubits == 0) throw std::invalid_argument("a stabilizer state needs at least one qubit");
    Tableau t;
    for (size_t q = 0; q < num_qubits; q++) {
        t.stabilizers_.push_back(PauliString::single(num_qubits, q, basis == Basis::kAllZero ? 'Z' : 'X'));
        t.destabilizers_.push_back(PauliString::single(num_qubits, q, basis == Basis::kAllZero ? 'X' : 'Z'));
    }
    return t;
}

Tableau Tableau::from_rows(std::vector<PauliString> stabilizers, std::vector<PauliString> destabilizers) {
    Tableau t;
    t.stabilizers_ = std::move(stabilizers);
    t.destabilizers_ = std::move(destabilizers);
    if (auto err = t.check_invariants()) throw std::invalid_argument("invalid tableau rows: " + *err);
    return t;
}

Tableau Tableau::from_stabilizers(std::vector<PauliString> stabilizers) {
    size_t n = stabilizers.size();
    if (n == 0) throw std::invalid_argument("a stabilizer state needs at least one qubit");
    for (const auto &s : stabilizers) {
        if (s.num_qubits() != n) throw std::invalid_argument("need exactly n generators on n qubits");
        if (!s.is_hermitian()) throw std::invalid_argument("generator " + s.str() + " is not Hermitian");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!stabilizers[i].commutes(stabilizers[j])) {
                throw std::invalid_argument("generators " + stabilizers[i].str() + " and " + stabilizers[j].str() +
                                            " anticommute");
            }
        }
    }

    // Solve <d_i, s_j> = delta_ij. With d = (d_x | d_z) the symplectic product
    // against s is d_x.s_z + d_z.s_x, so row j of the system is (s_j.z | s_j.x).
    // The augmented identity tracks the row operations.
    std::vector<BitVector> sys(n, BitVector(2 * n));
    std::vector<BitVector> aug(n, BitVector(n));
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            sys[j].set(q, stabilizers[j].z(q));
            sys[j].set(n + q, stabilizers[j].x(q));
        }
        aug[j].set(j, true);
    }
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < 2 * n && r < n; col++) {
        size_t found = n;
        for (size_t i = r; i < n; i++) {
            if (sys[i][col]) {
                found = i;
                break;
            }
        }
        if (found == n) continue;
        std::swap(sys[r], sys[found]);
        std::swap(aug[r], aug[found]);
        for (size_t i = 0; i < n; i++) {
            if (i != r && sys[i][col]) {
                sys[i] ^= sys[r];
                aug[i] ^= aug[r];
            }
        }
        pivot_col.push_back(col);
        r++;
    }
    if (r < n) throw std::invalid_argument("generators are not independent");

    std::vector<PauliString> destabilizers(n, PauliString(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t row = 0; row < n; row++) {
            if (!aug[row][i]) continue;
            size_t col = pivot_col[row];
            if (col < n) {
                destabilizers[i].set_x(col, true);
            } else {
                destabilizers[i].set_z(col - n, true);
            }
        }
        // Make d_i commute with every earlier destabilizer; adding s_j only
        // changes the product with d_j.
        for (size_t j = 0; j < i; j++) {
            if (!destabilizers[i].commutes(destabilizers[j])) destabilizers[i] *= stabilizers[j];
        }
        destabilizers[i].set_phase(0);
    }
    return from_rows(std::move(stabilizers), std::move(destabilizers));
}

void Tableau::conjugate_all(Gate gate, size_t a, size_t b) {
    size_t n = num_qubits();
    if (a >= n || b >= n) throw std::out_of_range("qubit index out of range");
    for (auto &row : stabilizers_) conjugate_by_gate(row, gate, a, b);
    for (auto &row : destabilizers_) conjugate_by_gate(row, gate, a, b);
}

void Tableau::apply_gate(Gate gate, std::span<const size_t> qubits) {
    bool two_qubit = gate == Gate::kCZ || gate == Gate::kCNOT;
    if (qubits.size() != (two_qubit ? 2u : 1u)) throw std::invalid_argument("wrong number of qubits for gate");
    if (two_qubit) {
        if (qubits[0] == qubits[1]) throw std::invalid_argument("two-qubit gate needs distinct qubits");
        conjugate_all(gate, qubits[0], qubits[1]);
    } else {
        conjugate_all(gate, qubits[0]);
    }
}

void Tableau::check_hermitian(const PauliString &op, size_t n) {
    if (op.num_qubits() != n) throw std::invalid_argument("observable acts on the wrong number of qubits");
    if (!op.is_hermitian()) throw std::invalid_argument("observable " + op.str() + " is not Hermitian");
}

std::optional<size_t> Tableau::anticommuting_stabilizer(const PauliString &op) const {
    for (size_t i = 0; i < stabilizers_.size(); i++) {
        if (!stabilizers_[i].commutes(op)) return i;
    }
    return std::nullopt;
}

std::optional<int> Tableau::deterministic_outcome(const PauliString &op) const {
    size_t n = num_qubits();
    check_hermitian(op, n);
    if (anticommuting_stabilizer(op)) return std::nullopt;
    // op commutes with the whole group, so it equals +-prod of the
    // stabilizers whose destabilizers it anticommutes with.
    PauliString product(n);
    for (size_t i = 0; i < n; i++) {
        if (!destabilizers_[i].commutes(op)) product *= stabilizers_[i];
    }
    if (product.xs() != op.xs() || product.zs() != op.zs()) {
        throw std::logic_error("tableau corrupted: commuting observable outside the stabilizer group");
    }
    return product.phase() == op.phase() ? +1 : -1;
}

void Tableau::collapse_random(const PauliString &op, size_t pivot, int outcome) {
    const PauliString pivot_row = stabilizers_[pivot];
    for (size_t i = 0; i < stabilizers_.size(); i++) {
        if (i != pivot && !stabilizers_[i].commutes(op)) stabilizers_[i] *= pivot_row;
    }
    for (size_t i = 0; i < destabilizers_.size(); i++) {
        if (i != pivot && !destabilizers_[i].commutes(op)) destabilizers_[i] *= pivot_row;
    }
    destabilizers_[pivot] = pivot_row;
    stabilizers_[pivot] = op;
    if (outcome < 0) stabilizers_[pivot].negate();
}

int Tableau::measure(const PauliString &op, std::mt19937_64 &rng) {
    if (auto det = deterministic_outcome(op)) return *det;
    int outcome = (rng() & 1) ? -1 : +1;
    collapse_random(op, *anticommuting_stabilizer(op), outcome);
    return outcome;
}

Projection Tableau::project_onto(const PauliString &op, int desired) {
    if (desired != 1 && desired != -1) throw std::invalid_argument("desired outcome must be +1 or -1");
    if (auto det = deterministic_outcome(op)) {
        return *det == desired ? Projection::kOk : Projection::kImpossibleOutcome;
    }
    collapse_random(op, *anticommuting_stabilizer(op), desired);
    return Projection::kOk;
}

int Tableau::reset(size_t q, Basis basis, std::mt19937_64 &rng) {
    int outcome = measure(PauliString::single(num_qubits(), q, 'Z'), rng);
    if (outcome < 0) x(q);
    if (basis == Basis::kAllPlus) h(q);
    return outcome;
}

std::optional<std::string> Tableau::check_invariants() const {
    size_t n = stabilizers_.size();
    if (destabilizers_.size() != n) return "row count mismatch";
    for (size_t i = 0; i < n; i++) {
        if (stabilizers_[i].num_qubits() != n || destabilizers_[i].num_qubits() != n) return "row width mismatch";
        if (!stabilizers_[i].is_hermitian()) return "stabilizer " + std::to_string(i) + " has an imaginary phase";
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i < j && !stabilizers_[i].commutes(stabilizers_[j])) {
                return "stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
            }
            if (i < j && !destabilizers_[i].commutes(destabilizers_[j])) {
                return "destabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
            }
            bool anti = !destabilizers_[i].commutes(stabilizers_[j]);
            if (anti != (i == j)) {
                return "destabilizer " + std::to_string(i) + " pairs incorrectly with stabilizer " + std::to_string(j);
            }
        }
    }
    // The symplectic pairing above already forces independence, which in
    // turn keeps -I out of the group; the rank check is kept as a direct test.
    if (symplectic_rank(stabilizers_) != n) return "stabilizers are not independent";
    return std::nullopt;
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < stabilizers_.size(); i++) {
        if (i) out << ' ';
        out << stabilizers_[i].str();
    }
    return out.str();
}

size_t symplectic_rank(std::vector<PauliString> rows) {
    if (rows.empty()) return 0;
    auto cols = all_columns(rows[0].num_qubits());
    return row_reduce(rows, cols, 0).size();
}

std::vector<PauliString> canonical_generators(std::vector<PauliString> generators) {
    if (generators.empty()) return generators;
    auto cols = all_columns(generators[0].num_qubits());
    auto pivots = row_reduce(generators, cols, 0);
    // Dependent rows reduce to +-I; keep a -I so a contradictory set never
    // compares equal to a valid one.
    std::vector<PauliString> out(generators.begin(), generators.begin() + pivots.size());
    for (size_t i = pivots.size(); i < generators.size(); i++) {
        if (generators[i].phase() != 0) out.push_back(generators[i]);
    }
    return out;
}

bool groups_equal(const Tableau &a, const Tableau &b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("groups_equal needs equal qubit counts");
    return canonical_generators(a.stabilizers()) == canonical_generators(b.stabilizers());
}

std::optional<Tableau> reduced_state(const Tableau &state, std::span<const size_t> subset) {
    size_t n = state.num_qubits();
    std::vector<bool> inside(n, false);
    for (size_t q : subset) {
        if (q >= n) throw std::out_of_range("subset qubit out of range");
        if (inside[q]) throw std::invalid_argument("duplicate qubit in subset");
        inside[q] = true;
    }
    std::vector<size_t> outside_cols;
    for (size_t q = 0; q < n; q++) {
        if (!inside[q]) {
            outside_cols.push_back(q);
            outside_cols.push_back(n + q);
        }
    }
    std::vector<PauliString> rows = state.stabilizers();
    size_t used = row_reduce(rows, outside_cols, 0).size();
    if (n - used != subset.size()) return std::nullopt;
    std::vector<PauliString> local;
    for (size_t i = used; i < n; i++) {
        PauliString restricted(subset.size());
        for (size_t k = 0; k < subset.size(); k++) {
            restricted.set_x(k, rows[i].x(subset[k]));
            restricted.set_z(k, rows[i].z(subset[k]));
        }
        restricted.set_phase(rows[i].phase());
        local.push_back(std::move(restricted));
    }
    return Tableau::from_stabilizers(std::move(local));
}

}  // namespace brokergraph
