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

namespace brokergraph::testing {

/// Dense 2^n x 2^n matrix, row-major, qubit q as bit q of the index.
struct Matrix {
    size_t dim = 0;
    std::vector<std::complex<double>> m;

    explicit Matrix(size_t d) : dim(d), m(d * d) {}
    std::complex<double> &at(size_t r, size_t c) { return m[r * dim + c]; }
    std::complex<double> at(size_t r, size_t c) const { return m[r * dim + c]; }

    static Matrix identity(size_t d) {
        Matrix out(d);
        for (size_t i = 0; i < d; i++) out.at(i, i) = 1;
        return out;
    }

    Matrix operator*(const Matrix &o) const {
        Matrix out(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t k = 0; k < dim; k++) {
                auto a = at(r, k);
                if (a == 0.0) continue;
                for (size_t c = 0; c < dim; c++) out.at(r, c) += a * o.at(k, c);
            }
        }
        return out;
    }

    Matrix dagger() const {
        Matrix out(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) out.at(c, r) = std::conj(at(r, c));
        }
        return out;
    }

    bool approx_equal(const Matrix &o, double tol = 1e-9) const {
        for (size_t i = 0; i < m.size(); i++) {
            if (std::abs(m[i] - o.m[i]) > tol) return false;
        }
        return true;
    }
};

/// Matrix of a Pauli string including its i^phase factor, built from
/// textbook single-qubit matrices.
inline Matrix pauli_matrix(const PauliString &p) {
    size_t n = p.num_qubits();
    size_t d = size_t{1} << n;
    Matrix out(d);
    const std::complex<double> i1(0, 1);
    std::complex<double> global = 1;
    for (unsigned k = 0; k < p.phase(); k++) global *= i1;
    for (size_t c = 0; c < d; c++) {
        size_t r = c;
        std::complex<double> amp = global;
        for (size_t q = 0; q < n; q++) {
            bool bit = (c >> q) & 1;
            switch (p.factor(q)) {
                case 'X':
                    r ^= size_t{1} << q;
                    break;
                case 'Y':
                    r ^= size_t{1} << q;
                    amp *= bit ? -i1 : i1;
                    break;
                case 'Z':
                    if (bit) amp = -amp;
                    break;
                default:
                    break;
            }
        }
        out.at(r, c) = amp;
    }
    return out;
}

/// Dense unitary of one gate on n qubits.
inline Matrix gate_matrix(size_t n, Gate g, size_t a, size_t b = 0) {
    size_t d = size_t{1} << n;
    Matrix out(d);
    const std::complex<double> i1(0, 1);
    const double s = 1 / std::sqrt(2.0);
    for (size_t c = 0; c < d; c++) {
        bool ba = (c >> a) & 1;
        bool bb = (c >> b) & 1;
        size_t flip_a = c ^ (size_t{1} << a);
        switch (g) {
            case Gate::kH:
                out.at(c & ~(size_t{1} << a), c) += s;
                out.at(c | (size_t{1} << a), c) += ba ? -s : s;
                break;
            case Gate::kS:
                out.at(c, c) = ba ? i1 : 1.0;
                break;
            case Gate::kSDag:
                out.at(c, c) = ba ? -i1 : 1.0;
                break;
            case Gate::kX:
                out.at(flip_a, c) = 1;
                break;
            case Gate::kY:
                out.at(flip_a, c) = ba ? -i1 : i1;
                break;
            case Gate::kZ:
                out.at(c, c) = ba ? -1.0 : 1.0;
                break;
            case Gate::kCZ:
                out.at(c, c) = (ba && bb) ? -1.0 : 1.0;
                break;
            case Gate::kCNOT:
                out.at(ba ? c ^ (size_t{1} << b) : c, c) = 1;
                break;
        }
    }
    return out;
}

}  // namespace brokergraph::testing
