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

#include <random>

#include "brokergraph/state_vector.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace brokergraph;
using brokergraph::testing::gate_matrix;
using brokergraph::testing::Matrix;
using brokergraph::testing::pauli_matrix;

namespace {

std::vector<PauliString> all_paulis(size_t n) {
    std::vector<PauliString> out;
    for (size_t k = 0; k < (size_t{1} << (2 * n)); k++) {
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set_x(q, (k >> (2 * q)) & 1);
            p.set_z(q, (k >> (2 * q + 1)) & 1);
        }
        out.push_back(p);
    }
    return out;
}

/// Dense |psi> from |0..0> or |+..+> by explicit gate matrices.
Amplitudes dense_start(size_t n, Basis basis) {
    size_t d = size_t{1} << n;
    Amplitudes psi(d);
    if (basis == Basis::kAllZero) {
        psi[0] = 1;
    } else {
        for (auto &a : psi) a = 1 / std::sqrt(static_cast<double>(d));
    }
    return psi;
}

Amplitudes times(const Matrix &m, const Amplitudes &v) {
    Amplitudes out(v.size());
    for (size_t r = 0; r < m.dim; r++) {
        for (size_t c = 0; c < m.dim; c++) out[r] += m.at(r, c) * v[c];
    }
    return out;
}

}  // namespace

TEST(Tableau, gate_conjugation_matches_dense_on_all_two_qubit_paulis) {
    const Gate gates[] = {Gate::kH, Gate::kS, Gate::kSDag, Gate::kX, Gate::kY, Gate::kZ, Gate::kCZ, Gate::kCNOT};
    for (Gate g : gates) {
        for (size_t a = 0; a < 2; a++) {
            size_t b = 1 - a;
            Matrix u = gate_matrix(2, g, a, b);
            for (auto p : all_paulis(2)) {
                Matrix expected = u * pauli_matrix(p) * u.dagger();
                PauliString q = p;
                conjugate_by_gate(q, g, a, b);
                ASSERT_TRUE(pauli_matrix(q).approx_equal(expected))
                    << "gate " << static_cast<int>(g) << " on " << a << " of " << p.str() << " gave " << q.str();
            }
        }
    }
}

TEST(Tableau, cnot_images_of_the_sixteen_inputs) {
    // Heisenberg images under CNOT(0 -> 1), written out by hand.
    const std::pair<const char *, const char *> table[] = {
        {"__", "+__"}, {"X_", "+XX"}, {"Y_", "+YX"}, {"Z_", "+Z_"}, {"_X", "+_X"}, {"XX", "+X_"},
        {"YX", "+Y_"}, {"ZX", "+ZX"}, {"_Y", "+ZY"}, {"XY", "+YZ"}, {"YY", "-XZ"}, {"ZY", "+_Y"},
        {"_Z", "+ZZ"}, {"XZ", "-YY"}, {"YZ", "+XY"}, {"ZZ", "+_Z"},
    };
    for (const auto &[in, out] : table) {
        auto p = PauliString::from_string(in);
        conjugate_by_gate(p, Gate::kCNOT, 0, 1);
        ASSERT_EQ(p.str(), out) << in;
    }
}

TEST(Tableau, new_states) {
    auto z = Tableau::new_state(3, Basis::kAllZero);
    auto x = Tableau::new_state(3, Basis::kAllPlus);
    for (size_t q = 0; q < 3; q++) {
        ASSERT_EQ(z.deterministic_outcome(PauliString::single(3, q, 'Z')), 1);
        ASSERT_EQ(x.deterministic_outcome(PauliString::single(3, q, 'X')), 1);
        ASSERT_EQ(z.deterministic_outcome(PauliString::single(3, q, 'X')), std::nullopt);
    }
    ASSERT_FALSE(z.check_invariants().has_value());
}

TEST(Tableau, bell_pair_correlations) {
    auto t = Tableau::new_state(2, Basis::kAllZero);
    t.h(0);
    t.cnot(0, 1);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("ZZ")), 1);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("XX")), 1);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("YY")), -1);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("Z_")), std::nullopt);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; k++) {
        auto copy = t;
        int m0 = copy.measure(PauliString::from_string("Z_"), rng);
        ASSERT_EQ(copy.deterministic_outcome(PauliString::from_string("_Z")), m0);
    }
}

TEST(Tableau, random_circuits_match_dense_matrices) {
    std::mt19937_64 rng(5);
    const Gate gates[] = {Gate::kH, Gate::kS, Gate::kSDag, Gate::kX, Gate::kY, Gate::kZ, Gate::kCZ, Gate::kCNOT};
    for (int c = 0; c < 100; c++) {
        size_t n = 2 + rng() % 4;
        Basis basis = (rng() & 1) ? Basis::kAllPlus : Basis::kAllZero;
        auto t = Tableau::new_state(n, basis);
        Amplitudes psi = dense_start(n, basis);
        for (int k = 0; k < 30; k++) {
            Gate g = gates[rng() % 8];
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            if (g == Gate::kCZ || g == Gate::kCNOT) {
                t.apply_gate(g, {a, b});
            } else {
                t.apply_gate(g, {a});
            }
            psi = times(gate_matrix(n, g, a, b), psi);
        }
        ASSERT_GT(overlap_magnitude(state_vector(t), psi), 1 - 1e-9);
    }
}

TEST(Tableau, x_measurements_on_a_four_chain) {
    // Chain 0-1-2-3 as a graph state; measure X on each vertex in turn and
    // compare with the dense projection of the same outcomes.
    for (size_t target = 0; target < 4; target++) {
        for (int outcome : {+1, -1}) {
            auto t = Tableau::new_state(4, Basis::kAllPlus);
            Amplitudes psi = dense_start(4, Basis::kAllPlus);
            for (size_t v = 0; v < 3; v++) {
                t.cz(v, v + 1);
                psi = times(gate_matrix(4, Gate::kCZ, v, v + 1), psi);
            }
            auto x = PauliString::single(4, target, 'X');
            ASSERT_EQ(t.deterministic_outcome(x), std::nullopt);
            ASSERT_EQ(t.project_onto(x, outcome), Projection::kOk);
            Amplitudes projected = apply_pauli(x, psi);
            for (size_t i = 0; i < psi.size(); i++) projected[i] = (psi[i] + double(outcome) * projected[i]) / std::sqrt(2.0);
            ASSERT_GT(overlap_magnitude(state_vector(t), projected), 1 - 1e-9);
            ASSERT_EQ(t.project_onto(x, -outcome), Projection::kImpossibleOutcome);
        }
    }
}

TEST(Tableau, from_stabilizers_roundtrip_and_errors) {
    std::vector<PauliString> gens = {PauliString::from_string("XZ_"), PauliString::from_string("ZXZ"),
                                     PauliString::from_string("-_ZX")};
    auto t = Tableau::from_stabilizers(gens);
    ASSERT_FALSE(t.check_invariants().has_value());
    for (const auto &g : gens) ASSERT_EQ(t.deterministic_outcome(g), 1);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("_ZX")), -1);
    ASSERT_THROW(Tableau::from_stabilizers({PauliString::from_string("X"), PauliString::from_string("Z")}),
                 std::invalid_argument);
    ASSERT_THROW(Tableau::from_stabilizers({PauliString::from_string("XX"), PauliString::from_string("XX")}),
                 std::invalid_argument);
}

TEST(Tableau, canonical_generators_identify_groups) {
    auto a = Tableau::from_stabilizers({PauliString::from_string("XX"), PauliString::from_string("ZZ")});
    auto b = Tableau::from_stabilizers({PauliString::from_string("-YY"), PauliString::from_string("XX")});
    ASSERT_TRUE(groups_equal(a, b));
    auto c = Tableau::from_stabilizers({PauliString::from_string("XX"), PauliString::from_string("-ZZ")});
    ASSERT_FALSE(groups_equal(a, c));
}

TEST(Tableau, reduced_state_of_product_and_entangled_parts) {
    auto t = Tableau::new_state(3, Basis::kAllZero);
    t.h(0);
    t.cnot(0, 1);
    t.h(2);
    std::vector<size_t> third = {2};
    auto r = reduced_state(t, third);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(r->deterministic_outcome(PauliString::from_string("X")), 1);
    std::vector<size_t> half = {0};
    ASSERT_FALSE(reduced_state(t, half).has_value());
    std::vector<size_t> pair = {1, 0};
    auto bell = reduced_state(t, pair);
    ASSERT_TRUE(bell.has_value());
    ASSERT_EQ(bell->deterministic_outcome(PauliString::from_string("XX")), 1);
}

TEST(Tableau, reset_prepares_requested_basis) {
    std::mt19937_64 rng(2);
    auto t = Tableau::new_state(2, Basis::kAllZero);
    t.h(0);
    t.cnot(0, 1);
    t.reset(0, Basis::kAllPlus, rng);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("X_")), 1);
    t.reset(1, Basis::kAllZero, rng);
    ASSERT_EQ(t.deterministic_outcome(PauliString::from_string("_Z")), 1);
}

TEST(Tableau, fuzz_invariants_over_ten_thousand_sequences) {
    std::mt19937_64 rng(11);
    const Gate gates[] = {Gate::kH, Gate::kS, Gate::kSDag, Gate::kX, Gate::kY, Gate::kZ, Gate::kCZ, Gate::kCNOT};
    for (int s = 0; s < 10000; s++) {
        size_t n = 2 + rng() % 5;
        auto t = Tableau::new_state(n, Basis::kAllZero);
        for (int k = 0; k < 12; k++) {
            if (rng() % 3 == 0) {
                PauliString p(n);
                do {
                    for (size_t q = 0; q < n; q++) {
                        p.set_x(q, rng() & 1);
                        p.set_z(q, rng() & 1);
                    }
                } while (p.is_identity());
                t.measure(p, rng);
            } else {
                Gate g = gates[rng() % 8];
                size_t a = rng() % n;
                size_t b = (a + 1 + rng() % (n - 1)) % n;
                if (g == Gate::kCZ || g == Gate::kCNOT) {
                    t.apply_gate(g, {a, b});
                } else {
                    t.apply_gate(g, {a});
                }
            }
        }
        auto err = t.check_invariants();
        ASSERT_FALSE(err.has_value()) << *err;
    }
}
