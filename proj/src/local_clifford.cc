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

#include <stdexcept>

namespace brokergraph {

namespace {

SignedPauli multiply(SignedPauli a, SignedPauli b) {
    PauliString pa(1), pb(1);
    pa.set_x(0, a.x);
    pa.set_z(0, a.z);
    pa.set_phase(a.phase);
    pb.set_x(0, b.x);
    pb.set_z(0, b.z);
    pb.set_phase(b.phase);
    pa *= pb;
    return {pa.x(0), pa.z(0), pa.phase()};
}

SignedPauli conjugate_single(SignedPauli p, Gate gate) {
    PauliString ps(1);
    ps.set_x(0, p.x);
    ps.set_z(0, p.z);
    ps.set_phase(p.phase);
    conjugate_by_gate(ps, gate, 0);
    return {ps.x(0), ps.z(0), ps.phase()};
}

struct Element {
    SignedPauli image_x;
    SignedPauli image_z;
    std::vector<Gate> gates;
};

// Breadth-first closure of {H, S} from the identity. Element 0 is the identity.
struct Group {
    std::vector<Element> elements;
    std::vector<std::array<size_t, 24>> compose;  // compose[a][b] = index of "a then b"
    std::vector<size_t> inverse;

    size_t find(SignedPauli ix, SignedPauli iz) const {
        for (size_t i = 0; i < elements.size(); i++) {
            if (elements[i].image_x == ix && elements[i].image_z == iz) return i;
        }
        return elements.size();
    }

    Group() {
        elements.push_back({{true, false, 0}, {false, true, 0}, {}});
        for (size_t head = 0; head < elements.size(); head++) {
            for (Gate g : {Gate::kH, Gate::kS}) {
                Element next{conjugate_single(elements[head].image_x, g), conjugate_single(elements[head].image_z, g),
                             elements[head].gates};
                next.gates.push_back(g);
                if (find(next.image_x, next.image_z) == elements.size()) elements.push_back(next);
            }
        }
        if (elements.size() != 24) throw std::logic_error("single-qubit Clifford closure is not 24 elements");
        compose.resize(24);
        inverse.resize(24);
        for (size_t a = 0; a < 24; a++) {
            for (size_t b = 0; b < 24; b++) {
                SignedPauli ix = image_under(b, elements[a].image_x);
                SignedPauli iz = image_under(b, elements[a].image_z);
                compose[a][b] = find(ix, iz);
            }
        }
        for (size_t a = 0; a < 24; a++) {
            for (size_t b = 0; b < 24; b++) {
                if (compose[a][b] == 0) inverse[a] = b;
            }
        }
    }

    SignedPauli image_under(size_t c, SignedPauli p) const {
        const Element &e = elements[c];
        SignedPauli out{false, false, 0};
        if (p.x && p.z) {
            // Y = i X Z
            out = multiply(e.image_x, e.image_z);
            out.phase = (out.phase + 1) & 3;
        } else if (p.x) {
            out = e.image_x;
        } else if (p.z) {
            out = e.image_z;
        }
        out.phase = (out.phase + p.phase) & 3;
        return out;
    }
};

const Group &group() {
    static const Group g;
    return g;
}

}  // namespace

LocalClifford LocalClifford::from_gate(Gate gate) {
    switch (gate) {
        case Gate::kH:
        case Gate::kS:
        case Gate::kSDag:
        case Gate::kX:
        case Gate::kY:
        case Gate::kZ: {
            SignedPauli ix = conjugate_single({true, false, 0}, gate);
            SignedPauli iz = conjugate_single({false, true, 0}, gate);
            return from_images(ix, iz);
        }
        default:
            throw std::invalid_argument("not a single-qubit gate");
    }
}

LocalClifford LocalClifford::from_images(SignedPauli image_x, SignedPauli image_z) {
    size_t k = group().find(image_x, image_z);
    if (k == 24) throw std::invalid_argument("images do not define a single-qubit Clifford");
    return LocalClifford(k);
}

const std::array<LocalClifford, 24> &LocalClifford::all() {
    static const std::array<LocalClifford, 24> table = [] {
        std::array<LocalClifford, 24> t;
        for (size_t i = 0; i < 24; i++) t[i] = LocalClifford(i);
        return t;
    }();
    return table;
}

SignedPauli LocalClifford::image_x() const { return group().elements[index_].image_x; }
SignedPauli LocalClifford::image_z() const { return group().elements[index_].image_z; }
SignedPauli LocalClifford::image(SignedPauli p) const { return group().image_under(index_, p); }

LocalClifford LocalClifford::then(const LocalClifford &next) const {
    return LocalClifford(group().compose[index_][next.index_]);
}

LocalClifford LocalClifford::inverse() const { return LocalClifford(group().inverse[index_]); }

bool LocalClifford::is_z_diagonal() const {
    SignedPauli iz = image_z();
    return !iz.x && iz.z;
}

void LocalClifford::conjugate(PauliString &p, size_t q) const {
    SignedPauli in{p.x(q), p.z(q), 0};
    SignedPauli out = image(in);
    p.set_x(q, out.x);
    p.set_z(q, out.z);
    p.add_phase(out.phase);
}

void LocalClifford::apply_to(Tableau &state, size_t q) const {
    for (Gate g : gates()) state.apply_gate(g, {q});
}

const std::vector<Gate> &LocalClifford::gates() const { return group().elements[index_].gates; }

std::string LocalClifford::str() const {
    auto render = [](SignedPauli p) {
        std::string s = (p.phase == 2) ? "-" : "+";
        s.push_back(p.name());
        return s;
    };
    return "X->" + render(image_x()) + ",Z->" + render(image_z());
}

}  // namespace brokergraph
