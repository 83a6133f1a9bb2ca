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

#include "brokergraph/local_clifford.h"

#include <set>

#include "brokergraph/state_vector.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace brokergraph;
using brokergraph::testing::gate_matrix;
using brokergraph::testing::Matrix;
using brokergraph::testing::pauli_matrix;

namespace {

Matrix unitary_of(const LocalClifford &c) {
    Matrix u = Matrix::identity(2);
    for (Gate g : c.gates()) u = gate_matrix(1, g, 0) * u;
    return u;
}

Matrix signed_matrix(SignedPauli p) {
    PauliString s(1);
    s.set_x(0, p.x);
    s.set_z(0, p.z);
    s.set_phase(p.phase);
    return pauli_matrix(s);
}

// Equal up to a global phase.
bool same_up_to_phase(const Matrix &a, const Matrix &b) {
    std::complex<double> ratio = 0;
    for (size_t i = 0; i < a.m.size(); i++) {
        if (std::abs(b.m[i]) > 1e-9) {
            ratio = a.m[i] / b.m[i];
            break;
        }
    }
    if (std::abs(std::abs(ratio) - 1) > 1e-9) return false;
    for (size_t i = 0; i < a.m.size(); i++) {
        if (std::abs(a.m[i] - ratio * b.m[i]) > 1e-9) return false;
    }
    return true;
}

}  // namespace

TEST(LocalClifford, twenty_four_distinct_elements) {
    std::set<std::string> seen;
    for (const auto &c : LocalClifford::all()) seen.insert(c.str());
    ASSERT_EQ(seen.size(), 24u);
    ASSERT_TRUE(LocalClifford::all()[0].is_identity());
    ASSERT_EQ(LocalClifford::identity().str(), "X->+X,Z->+Z");
}

TEST(LocalClifford, images_match_dense_conjugation) {
    for (const auto &c : LocalClifford::all()) {
        Matrix u = unitary_of(c);
        Matrix x = signed_matrix({true, false, 0});
        Matrix y = signed_matrix({true, true, 0});
        Matrix z = signed_matrix({false, true, 0});
        ASSERT_TRUE((u * x * u.dagger()).approx_equal(signed_matrix(c.image_x()))) << c.str();
        ASSERT_TRUE((u * z * u.dagger()).approx_equal(signed_matrix(c.image_z()))) << c.str();
        ASSERT_TRUE((u * y * u.dagger()).approx_equal(signed_matrix(c.image({true, true, 0})))) << c.str();
    }
}

TEST(LocalClifford, then_applies_left_operand_first) {
    auto h = LocalClifford::from_gate(Gate::kH);
    auto s = LocalClifford::from_gate(Gate::kS);
    // H then S sends Z -> X -> Y.
    SignedPauli iz = h.then(s).image_z();
    ASSERT_EQ(iz.name(), 'Y');
    ASSERT_EQ(iz.phase, 0);
    for (const auto &a : LocalClifford::all()) {
        for (const auto &b : LocalClifford::all()) {
            Matrix expected = unitary_of(b) * unitary_of(a);
            ASSERT_TRUE(same_up_to_phase(unitary_of(a.then(b)), expected)) << a.str() << " then " << b.str();
        }
    }
}

TEST(LocalClifford, inverse_and_closure) {
    for (const auto &a : LocalClifford::all()) {
        ASSERT_TRUE(a.then(a.inverse()).is_identity());
        ASSERT_TRUE(a.inverse().then(a).is_identity());
        ASSERT_TRUE(same_up_to_phase(unitary_of(a.inverse()), unitary_of(a).dagger()));
    }
}

TEST(LocalClifford, from_gate_and_from_images) {
    auto x = LocalClifford::from_gate(Gate::kX);
    ASSERT_EQ(x.str(), "X->+X,Z->-Z");
    ASSERT_TRUE(x.is_z_diagonal());
    ASSERT_FALSE(LocalClifford::from_gate(Gate::kH).is_z_diagonal());
    auto sd = LocalClifford::from_gate(Gate::kSDag);
    ASSERT_TRUE(sd.then(LocalClifford::from_gate(Gate::kS)).is_identity());
    ASSERT_THROW(LocalClifford::from_gate(Gate::kCZ), std::invalid_argument);
    ASSERT_THROW(LocalClifford::from_images({true, false, 0}, {true, false, 0}), std::invalid_argument);
    size_t diag = 0;
    for (const auto &c : LocalClifford::all()) diag += c.is_z_diagonal();
    ASSERT_EQ(diag, 8u);
}

TEST(LocalClifford, conjugate_and_apply_agree_with_tableau) {
    for (const auto &c : LocalClifford::all()) {
        auto t = Tableau::new_state(2, Basis::kAllZero);
        t.h(0);
        t.cnot(0, 1);
        t.s(1);
        auto before = state_vector(t);
        c.apply_to(t, 1);
        Matrix u = Matrix::identity(4);
        for (Gate g : c.gates()) u = gate_matrix(2, g, 1) * u;
        Amplitudes expected(4);
        for (size_t r = 0; r < 4; r++) {
            for (size_t k = 0; k < 4; k++) expected[r] += u.at(r, k) * before[k];
        }
        ASSERT_GT(overlap_magnitude(state_vector(t), expected), 1 - 1e-9);

        PauliString p = PauliString::from_string("XY");
        PauliString q = p;
        c.conjugate(q, 1);
        ASSERT_TRUE(pauli_matrix(q).approx_equal(u * pauli_matrix(p) * u.dagger())) << c.str();
    }
}
