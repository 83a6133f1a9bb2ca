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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace brokergraph;
using brokergraph::testing::gate_matrix;
using brokergraph::testing::Matrix;
using brokergraph::testing::pauli_matrix;

TEST(DenseState, gates_match_matrices) {
    std::mt19937_64 rng(31);
    const Gate gates[] = {Gate::kH, Gate::kS, Gate::kSDag, Gate::kX, Gate::kY, Gate::kZ, Gate::kCZ, Gate::kCNOT};
    for (int k = 0; k < 50; k++) {
        size_t n = 2 + rng() % 3;
        DenseState s(n, Basis::kAllZero);
        Amplitudes psi(size_t{1} << n);
        psi[0] = 1;
        for (int j = 0; j < 20; j++) {
            Gate g = gates[rng() % 8];
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            s.apply_gate(g, a, b);
            Matrix u = gate_matrix(n, g, a, b);
            Amplitudes next(psi.size());
            for (size_t r = 0; r < psi.size(); r++) {
                for (size_t c = 0; c < psi.size(); c++) next[r] += u.at(r, c) * psi[c];
            }
            psi = next;
        }
        ASSERT_GT(overlap_magnitude(s.amplitudes(), psi), 1 - 1e-9);
    }
}

TEST(DenseState, apply_pauli_matches_matrix) {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 50; k++) {
        size_t n = 1 + rng() % 3;
        size_t d = size_t{1} << n;
        Amplitudes psi(d);
        for (auto &a : psi) a = {double(rng() % 7) - 3, double(rng() % 5) - 2};
        PauliString p(n);
        for (size_t q = 0; q < n; q++) p.set_factor(q, "_XYZ"[rng() % 4]);
        p.set_phase(rng() & 3);
        Matrix m = pauli_matrix(p);
        Amplitudes out = apply_pauli(p, psi);
        for (size_t r = 0; r < d; r++) {
            std::complex<double> expect = 0;
            for (size_t c = 0; c < d; c++) expect += m.at(r, c) * psi[c];
            ASSERT_NEAR(std::abs(out[r] - expect), 0, 1e-12);
        }
    }
}

TEST(DenseState, projection_probabilities) {
    DenseState s(2, Basis::kAllZero);
    s.apply_gate(Gate::kH, 0);
    s.apply_gate(Gate::kCNOT, 0, 1);
    ASSERT_NEAR(s.probability_plus(PauliString::from_string("ZZ")), 1.0, 1e-12);
    ASSERT_NEAR(s.probability_plus(PauliString::from_string("Z_")), 0.5, 1e-12);
    ASSERT_NEAR(s.project(PauliString::from_string("Z_"), -1), 0.5, 1e-12);
    ASSERT_NEAR(s.probability_plus(PauliString::from_string("_Z")), 0.0, 1e-12);
    ASSERT_EQ(s.project(PauliString::from_string("_Z"), +1), 0.0);
}

TEST(DenseState, state_vector_of_tableau) {
    auto t = Tableau::new_state(3, Basis::kAllPlus);
    auto v = state_vector(t);
    ASSERT_GT(overlap_magnitude(v, DenseState(3, Basis::kAllPlus).amplitudes()), 1 - 1e-12);
    ASSERT_THROW(DenseState(Amplitudes(3)), std::invalid_argument);
    ASSERT_THROW(state_vector(Tableau::new_state(kMaxDenseQubits + 1, Basis::kAllZero)), std::invalid_argument);
}
