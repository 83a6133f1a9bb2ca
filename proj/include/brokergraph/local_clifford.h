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
#include <string>
#include <vector>

#include "brokergraph/pauli_string.h"
#include "brokergraph/tableau.h"

namespace brokergraph {

/// A signed single-qubit Pauli (x, z bits plus a power of i; Y = (1,1)).
struct SignedPauli {
    bool x = false;
    bool z = false;
    uint8_t phase = 0;

    char name() const { return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'); }
    bool operator==(const SignedPauli &) const = default;
};

/// A single-qubit Clifford modulo global phase, stored by its conjugation
/// action: C X C^dagger and C Z C^dagger. There are exactly 24 of them.
class LocalClifford {
   public:
    LocalClifford() : LocalClifford(0) {}

    static LocalClifford identity() { return LocalClifford(0); }
    static LocalClifford from_gate(Gate gate);
    static LocalClifford from_images(SignedPauli image_x, SignedPauli image_z);
    static const std::array<LocalClifford, 24> &all();

    SignedPauli image_x() const;
    SignedPauli image_z() const;
    SignedPauli image(SignedPauli p) const;

    /// The Clifford that applies *this first and `next` second.
    LocalClifford then(const LocalClifford &next) const;
    LocalClifford inverse() const;

    bool is_identity() const { return index_ == 0; }
    /// Maps Z to +-Z, i.e. diagonal in the computational basis.
    bool is_z_diagonal() const;

    /// Conjugates factor `q` of `p`.
    void conjugate(PauliString &p, size_t q) const;
    /// Applies the Clifford to qubit `q` of a state.
    void apply_to(Tableau &state, size_t q) const;
    /// Gate word (H and S only) that implements this element, in application order.
    const std::vector<Gate> &gates() const;

    /// e.g. "X->+Z,Z->+X".
    std::string str() const;
    size_t index() const { return index_; }

    bool operator==(const LocalClifford &other) const { return index_ == other.index_; }

   private:
    explicit LocalClifford(size_t index) : index_(index) {}
    size_t index_;
};

}  // namespace brokergraph
