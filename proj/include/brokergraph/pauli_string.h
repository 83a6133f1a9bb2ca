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
#include <cstdint>
#include <string>
#include <string_view>

#include "brokergraph/bit_vector.h"

namespace brokergraph {

/// An n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}.
///
/// Each factor is encoded by an (x, z) bit pair: (0,0)=I, (1,0)=X, (0,1)=Z,
/// (1,1)=Y. Note that Y is the actual Hermitian Y, not XZ, so a Hermitian
/// string always has an even phase.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

    /// Parses strings like "+XZ_Y", "-ZZ", "iXY" or "XIZ". '_' and 'I' both
    /// denote identity.
    static PauliString from_string(std::string_view text);
    /// Single-qubit factor `pauli` ('X', 'Y' or 'Z') on qubit `q` of an
    /// n-qubit identity.
    static PauliString single(size_t num_qubits, size_t q, char pauli);
    static PauliString two(size_t num_qubits, size_t a, char pauli_a, size_t b, char pauli_b);

    size_t num_qubits() const { return xs_.size(); }

    bool x(size_t q) const { return xs_[q]; }
    bool z(size_t q) const { return zs_[q]; }
    void set_x(size_t q, bool v) { xs_.set(q, v); }
    void set_z(size_t q, bool v) { zs_.set(q, v); }
    /// 'I', 'X', 'Y' or 'Z'.
    char factor(size_t q) const;
    void set_factor(size_t q, char pauli);

    uint8_t phase() const { return phase_; }
    void set_phase(unsigned phase) { phase_ = phase & 3; }
    void add_phase(unsigned delta) { phase_ = (phase_ + delta) & 3; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1 for Hermitian strings.
    int sign() const { return phase_ == 2 ? -1 : 1; }
    void negate() { add_phase(2); }

    bool is_identity() const { return !xs_.any() && !zs_.any(); }
    size_t weight() const;

    bool commutes(const PauliString &other) const;

    /// Right multiplication: *this = *this * other.
    PauliString &operator*=(const PauliString &other);
    friend PauliString operator*(PauliString a, const PauliString &b) { return a *= b; }

    BitVector &xs() { return xs_; }
    BitVector &zs() { return zs_; }
    const BitVector &xs() const { return xs_; }
    const BitVector &zs() const { return zs_; }

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    auto operator<=>(const PauliString &other) const = default;

   private:
    BitVector xs_;
    BitVector zs_;
    uint8_t phase_ = 0;
};

}  // namespace brokergraph
