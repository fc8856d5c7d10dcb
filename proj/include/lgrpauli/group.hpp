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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lgrpauli/gf2.hpp"
#include "lgrpauli/pauli.hpp"
#include "lgrpauli/projection.hpp"

namespace lgrpauli {

/// An invertible 2x2 matrix over GF(2), packed as bits
/// (0: row 1 col 1, 1: row 1 col 2, 2: row 2 col 1, 3: row 2 col 2).
struct Mat2 {
    uint8_t bits = 0b1001;

    static constexpr Mat2 identity() { return Mat2{0b1001}; }
    /// Throws std::invalid_argument unless `m` is an invertible 2x2 matrix.
    static Mat2 from_binmat(const BinMat &m);
    BinMat to_binmat() const;

    bool get(size_t row, size_t col) const { return bits >> (2 * (row - 1) + (col - 1)) & 1; }
    bool invertible() const;
    friend Mat2 operator*(Mat2 a, Mat2 b);
    bool operator==(const Mat2 &other) const = default;
    auto operator<=>(const Mat2 &other) const = default;
};

/// All six elements of SL(2,2) = GL(2,2), in ascending bit order.
const std::array<Mat2, 6> &sl22();

/// An element of SL(2,2)^N ⋊ S_N acting on the 2^N coordinates of
/// PG(2^N - 1, 2) viewed as (GF(2)^2)^{⊗N}.
///
/// Axis a (0-based) is the tensor factor of element a+1: coordinate I has
/// index bit a equal to 1 iff a+1 is in I. The element first applies
/// factor(a) along every axis a, then moves axis a to axis perm(a).
class GroupElem {
   public:
    /// `perm` must be a permutation of 0..N-1.
    GroupElem(std::vector<Mat2> factors, std::vector<uint8_t> perm);

    static GroupElem identity(size_t n_qubits);
    static GroupElem axis_factor(size_t n_qubits, size_t axis, Mat2 m);
    static GroupElem transposition(size_t n_qubits, size_t axis_a, size_t axis_b);

    size_t n_qubits() const { return factors_.size(); }
    Mat2 factor(size_t axis) const { return factors_[axis]; }
    size_t perm(size_t axis) const { return perm_[axis]; }

    /// act(g * h, p) == act(g, act(h, p)).
    friend GroupElem operator*(const GroupElem &g, const GroupElem &h);
    GroupElem inverse() const;

    /// Action on a packed point (bit key(I) is coordinate I).
    uint64_t act_packed(uint64_t encoding) const;
    ProjPoint act(const ProjPoint &p) const;
    /// Matrix M with act(x) = M x in internal coordinate order.
    BinMat linear_map() const;

    std::string to_string() const;
    bool operator==(const GroupElem &other) const = default;

   private:
    std::vector<Mat2> factors_;
    std::vector<uint8_t> perm_;
};

/// 6^N * N!.
uint64_t group_order(size_t n_qubits);

/// Per axis [[1,1],[0,1]] and [[0,1],[1,0]], then the transpositions of
/// adjacent axes. These generate the group.
std::vector<GroupElem> bfs_generators(size_t n_qubits);

/// Every group element, deterministic order. 1 <= N <= 4.
std::vector<GroupElem> enumerate_group(size_t n_qubits);

}  // namespace lgrpauli
