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

#include "brokergraph/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace brokergraph {

namespace {

using cd = std::complex<double>;

void check_size(size_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense oracle is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
}

void normalize(Amplitudes &v) {
    double norm = 0;
    for (const auto &a : v) norm += std::norm(a);
    norm = std::sqrt(norm);
    if (norm == 0) throw std::logic_error("cannot normalize a zero vector");
    for (auto &a : v) a /= norm;
}

cd phase_factor(unsigned k) {
    static const cd kPowers[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return kPowers[k & 3];
}

}  // namespace

Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi) {
    size_t n = p.num_qubits();
    uint64_t xmask = 0, zmask = 0;
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) xmask |= uint64_t{1} << q;
        if (p.z(q)) zmask |= uint64_t{1} << q;
    }
    // Y = i X Z per qubit, so P = i^(phase + #Y) X^x Z^z with Z acting first.
    cd global = phase_factor(p.phase() + std::popcount(xmask & zmask));
    Amplitudes out(psi.size());
    for (uint64_t k = 0; k < psi.size(); k++) {
        double sign = (std::popcount(k & zmask) & 1) ? -1.0 : 1.0;
        out[k ^ xmask] = global * sign * psi[k];
    }
    return out;
}

double overlap_magnitude(const Amplitudes &a, const Amplitudes &b) {
    if (a.size() != b.size()) throw std::invalid_argument("vectors of different dimension");
    cd acc = 0;
    for (size_t k = 0; k < a.size(); k++) acc += std::conj(a[k]) * b[k];
    return std::abs(acc);
}

Amplitudes state_vector(const Tableau &state) {
    size_t n = state.num_qubits();
    check_size(n);
    // Find a computational basis state inside the support: fix each qubit's
    // Z value, choosing 0 whenever the outcome is still random.
    Tableau probe = state;
    uint64_t seed = 0;
    for (size_t q = 0; q < n; q++) {
        PauliString zq = PauliString::single(n, q, 'Z');
        auto det = probe.deterministic_outcome(zq);
        if (det && *det < 0) {
            seed |= uint64_t{1} << q;
        } else if (!det) {
            (void)probe.project_onto(zq, +1);
        }
    }
    Amplitudes psi(size_t{1} << n, 0.0);
    psi[seed] = 1.0;
    for (const auto &g : state.stabilizers()) {
        Amplitudes gpsi = apply_pauli(g, psi);
        for (size_t k = 0; k < psi.size(); k++) psi[k] = 0.5 * (psi[k] + gpsi[k]);
    }
    normalize(psi);
    return psi;
}

DenseState::DenseState(size_t num_qubits, Basis basis) : num_qubits_(num_qubits) {
    check_size(num_qubits);
    amps_.assign(size_t{1} << num_qubits, 0.0);
    if (basis == Basis::kAllZero) {
        amps_[0] = 1.0;
    } else {
        double a = 1.0 / std::sqrt(static_cast<double>(amps_.size()));
        for (auto &v : amps_) v = a;
    }
}

DenseState::DenseState(Amplitudes amplitudes) : amps_(std::move(amplitudes)) {
    size_t n = 0;
    while ((size_t{1} << n) < amps_.size()) n++;
    if ((size_t{1} << n) != amps_.size()) throw std::invalid_argument("dimension is not a power of two");
    check_size(n);
    num_qubits_ = n;
    normalize(amps_);
}

void DenseState::apply_gate(Gate gate, size_t a, size_t b) {
    if (a >= num_qubits_ || b >= num_qubits_) throw std::out_of_range("qubit index out of range");
    const uint64_t ma = uint64_t{1} << a, mb = uint64_t{1} << b;
    const double r = 1.0 / std::sqrt(2.0);
    switch (gate) {
        case Gate::kH:
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (k & ma) continue;
                cd v0 = amps_[k], v1 = amps_[k | ma];
                amps_[k] = r * (v0 + v1);
                amps_[k | ma] = r * (v0 - v1);
            }
            break;
        case Gate::kS:
        case Gate::kSDag:
        case Gate::kZ: {
            cd f = gate == Gate::kS ? cd(0, 1) : gate == Gate::kSDag ? cd(0, -1) : cd(-1, 0);
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (k & ma) amps_[k] *= f;
            }
            break;
        }
        case Gate::kX:
        case Gate::kY:
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (k & ma) continue;
                cd v0 = amps_[k], v1 = amps_[k | ma];
                if (gate == Gate::kX) {
                    amps_[k] = v1;
                    amps_[k | ma] = v0;
                } else {
                    amps_[k] = cd(0, -1) * v1;
                    amps_[k | ma] = cd(0, 1) * v0;
                }
            }
            break;
        case Gate::kCZ:
            if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if ((k & ma) && (k & mb)) amps_[k] = -amps_[k];
            }
            break;
        case Gate::kCNOT:
            if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if ((k & ma) && !(k & mb)) std::swap(amps_[k], amps_[k | mb]);
            }
            break;
    }
}

double DenseState::probability_plus(const PauliString &op) const {
    Amplitudes opsi = apply_pauli(op, amps_);
    cd expectation = 0;
    for (size_t k = 0; k < amps_.size(); k++) expectation += std::conj(amps_[k]) * opsi[k];
    return 0.5 * (1.0 + expectation.real());
}

double DenseState::project(const PauliString &op, int outcome) {
    Amplitudes opsi = apply_pauli(op, amps_);
    Amplitudes next(amps_.size());
    double prob = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        next[k] = 0.5 * (amps_[k] + static_cast<double>(outcome) * opsi[k]);
        prob += std::norm(next[k]);
    }
    if (prob < 1e-12) return 0.0;
    amps_ = std::move(next);
    normalize(amps_);
    return prob;
}

}  // namespace brokergraph
