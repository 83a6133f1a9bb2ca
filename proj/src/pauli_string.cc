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

#include "brokergraph/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace brokergraph {

PauliString PauliString::from_string(std::string_view text) {
    unsigned phase = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    } else if (!text.empty() && text.front() == '-') {
        phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set_factor(q, text[q]);
    }
    result.set_phase(phase);
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char pauli) {
    PauliString result(num_qubits);
    result.set_factor(q, pauli);
    return result;
}

PauliString PauliString::two(size_t num_qubits, size_t a, char pauli_a, size_t b, char pauli_b) {
    PauliString result(num_qubits);
    result.set_factor(a, pauli_a);
    result.set_factor(b, pauli_b);
    return result;
}

char PauliString::factor(size_t q) const {
    static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
    return kNames[(xs_[q] ? 1 : 0) | (zs_[q] ? 2 : 0)];
}

void PauliString::set_factor(size_t q, char pauli) {
    switch (pauli) {
        case 'I':
        case '_':
            xs_.set(q, false);
            zs_.set(q, false);
            break;
        case 'X':
            xs_.set(q, true);
            zs_.set(q, false);
            break;
        case 'Y':
            xs_.set(q, true);
            zs_.set(q, true);
            break;
        case 'Z':
            xs_.set(q, false);
            zs_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli factor: '") + pauli + "'");
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    auto xw = xs_.words();
    auto zw = zs_.words();
    for (size_t i = 0; i < xw.size(); i++) total += std::popcount(xw[i] | zw[i]);
    return total;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli strings act on different qubit counts");
    }
    auto x1 = xs_.words(), z1 = zs_.words(), x2 = other.xs_.words(), z2 = other.zs_.words();
    uint64_t acc = 0;
    for (size_t i = 0; i < x1.size(); i++) acc ^= (x1[i] & z2[i]) ^ (z1[i] & x2[i]);
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli strings act on different qubit counts");
    }
    auto x1 = xs_.words(), z1 = zs_.words();
    auto x2 = other.xs_.words(), z2 = other.zs_.words();
    // Per-qubit products that pick up +i or -i (e.g. X*Y = iZ, Y*X = -iZ).
    int delta = 0;
    for (size_t i = 0; i < x1.size(); i++) {
        uint64_t a = x1[i], b = z1[i], c = x2[i], d = z2[i];
        uint64_t plus = (a & b & ~c & d) | (a & ~b & c & d) | (~a & b & c & ~d);
        uint64_t minus = (a & b & c & ~d) | (a & ~b & ~c & d) | (~a & b & c & d);
        delta += std::popcount(plus) - std::popcount(minus);
        x1[i] = a ^ c;
        z1[i] = b ^ d;
    }
    add_phase(static_cast<unsigned>(((delta % 4) + 4) % 4 + other.phase_));
    return *this;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (size_t q = 0; q < num_qubits(); q++) {
        char f = factor(q);
        out.push_back(f == 'I' ? '_' : f);
    }
    return out;
}

}  // namespace brokergraph
