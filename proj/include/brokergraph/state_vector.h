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

#include <complex>
#include <cstddef>
#include <vector>

#include "brokergraph/pauli_string.h"
#include "brokergraph/tableau.h"

namespace brokergraph {

using Amplitudes = std::vector<std::complex<double>>;

/// Largest qubit count the dense oracle accepts (2^16 amplitudes).
inline constexpr size_t kMaxDenseQubits = 16;

/// Normalized amplitudes of the stabilizer state, qubit q as bit q of the
/// basis index. Throws std::invalid_argument for n > kMaxDenseQubits.
Amplitudes state_vector(const Tableau &state);

/// Applies a Pauli string (including its phase) to a dense vector.
Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi);

/// |<a|b>|; 1 means equal up to global phase.
double overlap_magnitude(const Amplitudes &a, const Amplitudes &b);

/// Dense state-vector simulator used as an independent check on the
/// tableau engine. Knows nothing about stabilizers.
class DenseState {
   public:
    DenseState(size_t num_qubits, Basis basis);
    explicit DenseState(Amplitudes amplitudes);

    size_t num_qubits() const { return num_qubits_; }
    const Amplitudes &amplitudes() const { return amps_; }

    void apply_gate(Gate gate, size_t a, size_t b = 0);

    /// Probability of the +1 outcome of a Hermitian Pauli observable.
    double probability_plus(const PauliString &op) const;
    /// Applies (I + s*op)/2 and renormalizes. Returns the branch probability
    /// (0 leaves the state untouched).
    double project(const PauliString &op, int outcome);

   private:
    size_t num_qubits_;
    Amplitudes amps_;
};

}  // namespace brokergraph
