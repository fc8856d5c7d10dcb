// Copyright 2026 The lgrpauli Authors
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

#include "lgrpauli/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "lgrpauli/errors.hpp"

namespace lgrpauli {

namespace {

// Bits of a 2^N-coordinate word whose index has bit `axis` clear.
constexpr std::array<uint64_t, 6> kAxisKeep = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

uint64_t word_mask(size_t n) {
    size_t bits = size_t{1} << n;
    return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

}  // namespace

Mat2 Mat2::from_binmat(const BinMat &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("Mat2: expected a 2x2 matrix");
    }
    Mat2 out{0};
    for (size_t r = 1; r <= 2; r++) {
        for (size_t c = 1; c <= 2; c++) {
            if (m.get(r, c)) {
                out.bits |= uint8_t(1u << (2 * (r - 1) + (c - 1)));
            }
        }
    }
    if (!out.invertible()) {
        throw std::invalid_argument("Mat2: matrix is singular");
    }
    return out;
}

BinMat Mat2::to_binmat() const {
    BinMat m(2, 2);
    for (size_t r = 1; r <= 2; r++) {
        for (size_t c = 1; c <= 2; c++) {
            m.set(r, c, get(r, c));
        }
    }
    return m;
}

bool Mat2::invertible() const { return (get(1, 1) && get(2, 2)) != (get(1, 2) && get(2, 1)); }

Mat2 operator*(Mat2 a, Mat2 b) {
    Mat2 out{0};
    for (size_t r = 1; r <= 2; r++) {
        for (size_t c = 1; c <= 2; c++) {
            bool v = (a.get(r, 1) && b.get(1, c)) != (a.get(r, 2) && b.get(2, c));
            if (v) {
                out.bits |= uint8_t(1u << (2 * (r - 1) + (c - 1)));
            }
        }
    }
    return out;
}

const std::array<Mat2, 6> &sl22() {
    static const std::array<Mat2, 6> kAll = [] {
        std::array<Mat2, 6> all{};
        size_t k = 0;
        for (uint8_t bits = 0; bits < 16; bits++) {
            if (Mat2{bits}.invertible()) {
                all[k++] = Mat2{bits};
            }
        }
        return all;
    }();
    return kAll;
}

GroupElem::GroupElem(std::vector<Mat2> factors, std::vector<uint8_t> perm)
    : factors_(std::move(factors)), perm_(std::move(perm)) {
    size_t n = factors_.size();
    if (n < 1 || n > kMaxQubits) {
        throw RangeError("GroupElem: N must be in 1..5");
    }
    if (perm_.size() != n) {
        throw std::invalid_argument("GroupElem: permutation length differs from factor count");
    }
    std::vector<bool> seen(n);
    for (uint8_t a : perm_) {
        if (a >= n || seen[a]) {
            throw std::invalid_argument("GroupElem: not a permutation");
        }
        seen[a] = true;
    }
    for (const Mat2 &m : factors_) {
        if (!m.invertible()) {
            throw std::invalid_argument("GroupElem: singular factor");
        }
    }
}

GroupElem GroupElem::identity(size_t n_qubits) {
    std::vector<uint8_t> perm(n_qubits);
    std::iota(perm.begin(), perm.end(), uint8_t{0});
    return GroupElem(std::vector<Mat2>(n_qubits, Mat2::identity()), std::move(perm));
}

GroupElem GroupElem::axis_factor(size_t n_qubits, size_t axis, Mat2 m) {
    GroupElem g = identity(n_qubits);
    if (axis >= n_qubits) {
        throw std::out_of_range("GroupElem: axis out of range");
    }
    g.factors_[axis] = m;
    if (!m.invertible()) {
        throw std::invalid_argument("GroupElem: singular factor");
    }
    return g;
}

GroupElem GroupElem::transposition(size_t n_qubits, size_t axis_a, size_t axis_b) {
    GroupElem g = identity(n_qubits);
    if (axis_a >= n_qubits || axis_b >= n_qubits) {
        throw std::out_of_range("GroupElem: axis out of range");
    }
    std::swap(g.perm_[axis_a], g.perm_[axis_b]);
    return g;
}

GroupElem operator*(const GroupElem &g, const GroupElem &h) {
    size_t n = g.n_qubits();
    if (h.n_qubits() != n) {
        throw std::invalid_argument("GroupElem: qubit counts differ");
    }
    // After h, the content of axis a sits on axis perm_h(a), where g applies
    // its own factor before permuting again.
    std::vector<Mat2> factors(n);
    std::vector<uint8_t> perm(n);
    for (size_t a = 0; a < n; a++) {
        factors[a] = g.factors_[h.perm_[a]] * h.factors_[a];
        perm[a] = g.perm_[h.perm_[a]];
    }
    return GroupElem(std::move(factors), std::move(perm));
}

GroupElem GroupElem::inverse() const {
    size_t n = n_qubits();
    std::vector<Mat2> factors(n);
    std::vector<uint8_t> perm(n);
    for (size_t a = 0; a < n; a++) {
        perm[perm_[a]] = uint8_t(a);
    }
    for (size_t b = 0; b < n; b++) {
        // Every element of GL(2,2) satisfies m^6 = 1.
        Mat2 m = factors_[perm[b]];
        Mat2 inv = m * m * m * m * m;
        factors[b] = inv;
    }
    return GroupElem(std::move(factors), std::move(perm));
}

uint64_t GroupElem::act_packed(uint64_t encoding) const {
    size_t n = n_qubits();
    uint64_t mask = word_mask(n);
    uint64_t p = encoding;
    for (size_t a = 0; a < n; a++) {
        Mat2 m = factors_[a];
        if (m == Mat2::identity()) {
            continue;
        }
        size_t shift = size_t{1} << a;
        uint64_t keep = kAxisKeep[a] & mask;
        uint64_t lo = p & keep;
        uint64_t hi = (p >> shift) & keep;
        uint64_t new_lo = (m.get(1, 1) ? lo : 0) ^ (m.get(1, 2) ? hi : 0);
        uint64_t new_hi = (m.get(2, 1) ? lo : 0) ^ (m.get(2, 2) ? hi : 0);
        p = new_lo | (new_hi << shift);
    }
    bool trivial = true;
    for (size_t a = 0; a < n; a++) {
        trivial &= perm_[a] == a;
    }
    if (trivial) {
        return p;
    }
    uint64_t out = 0;
    while (p) {
        uint32_t idx = uint32_t(std::countr_zero(p));
        p &= p - 1;
        uint32_t moved = 0;
        for (size_t a = 0; a < n; a++) {
            if (idx >> a & 1) {
                moved |= uint32_t{1} << perm_[a];
            }
        }
        out |= uint64_t{1} << moved;
    }
    return out;
}

ProjPoint GroupElem::act(const ProjPoint &p) const {
    if (p.n_qubits() != n_qubits()) {
        throw std::invalid_argument("GroupElem::act: dimension mismatch");
    }
    return ProjPoint(p.n_qubits(), act_packed(p.encoding()));
}

BinMat GroupElem::linear_map() const {
    size_t dim = size_t{1} << n_qubits();
    BinMat m(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        uint64_t col = act_packed(uint64_t{1} << k);
        for (size_t r = 0; r < dim; r++) {
            if (col >> r & 1) {
                m.set(r + 1, k + 1, true);
            }
        }
    }
    return m;
}

std::string GroupElem::to_string() const {
    std::string out = "(";
    for (size_t a = 0; a < n_qubits(); a++) {
        if (a > 0) {
            out += ", ";
        }
        out += "[[" + std::to_string(factors_[a].get(1, 1)) + "," + std::to_string(factors_[a].get(1, 2)) + "],[" +
               std::to_string(factors_[a].get(2, 1)) + "," + std::to_string(factors_[a].get(2, 2)) + "]]";
    }
    out += "; perm";
    for (size_t a = 0; a < n_qubits(); a++) {
        out += " " + std::to_string(perm_[a] + 1);
    }
    return out + ")";
}

uint64_t group_order(size_t n_qubits) {
    uint64_t order = 1;
    for (size_t k = 1; k <= n_qubits; k++) {
        order *= 6 * k;
    }
    return order;
}

std::vector<GroupElem> bfs_generators(size_t n_qubits) {
    std::vector<GroupElem> out;
    for (size_t a = 0; a < n_qubits; a++) {
        out.push_back(GroupElem::axis_factor(n_qubits, a, Mat2{0b1011}));
        out.push_back(GroupElem::axis_factor(n_qubits, a, Mat2{0b0110}));
    }
    for (size_t a = 0; a + 1 < n_qubits; a++) {
        out.push_back(GroupElem::transposition(n_qubits, a, a + 1));
    }
    return out;
}

std::vector<GroupElem> enumerate_group(size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw RangeError("enumerate_group: N must be in 1..4");
    }
    std::vector<uint8_t> perm(n_qubits);
    std::iota(perm.begin(), perm.end(), uint8_t{0});
    size_t factor_tuples = 1;
    for (size_t a = 0; a < n_qubits; a++) {
        factor_tuples *= 6;
    }
    std::vector<GroupElem> out;
    out.reserve(group_order(n_qubits));
    do {
        for (size_t t = 0; t < factor_tuples; t++) {
            std::vector<Mat2> factors(n_qubits);
            size_t rest = t;
            for (size_t a = 0; a < n_qubits; a++) {
                factors[a] = sl22()[rest % 6];
                rest /= 6;
            }
            out.emplace_back(std::move(factors), perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace lgrpauli
