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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace brokergraph {

/// Fixed-length GF(2) vector packed into 64-bit words. Bits past size() are
/// always zero so word-level popcounts and comparisons stay exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool operator[](size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }
    void clear() {
        for (auto &w : words_) w = 0;
    }

    BitVector &operator^=(const BitVector &other) {
        for (size_t i = 0; i < words_.size(); i++) words_[i] ^= other.words_[i];
        return *this;
    }

    size_t popcount() const {
        size_t total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }
    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    bool operator==(const BitVector &other) const = default;
    auto operator<=>(const BitVector &other) const = default;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace brokergraph
