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

#include "brokergraph/bit_vector.h"

#include "gtest/gtest.h"

using namespace brokergraph;

TEST(BitVector, set_flip_and_count) {
    BitVector v(130);
    ASSERT_EQ(v.size(), 130u);
    ASSERT_EQ(v.num_words(), 3u);
    ASSERT_FALSE(v.any());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    ASSERT_TRUE(v[0] && v[64] && v[129]);
    ASSERT_EQ(v.popcount(), 3u);
    v.flip(64);
    ASSERT_FALSE(v[64]);
    v.set(0, false);
    ASSERT_EQ(v.popcount(), 1u);
    v.clear();
    ASSERT_FALSE(v.any());
}

TEST(BitVector, xor_and_ordering) {
    BitVector a(70), b(70);
    a.set(3, true);
    a.set(69, true);
    b.set(69, true);
    b.set(5, true);
    BitVector c = a;
    c ^= b;
    ASSERT_TRUE(c[3]);
    ASSERT_TRUE(c[5]);
    ASSERT_FALSE(c[69]);
    ASSERT_NE(a, b);
    ASSERT_EQ(a, a);
    ASSERT_TRUE((a < b) != (b < a));
}
