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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgrpauli/gf2.hpp"

namespace lgrpauli {

/// Largest qubit count for which generators are enumerated.
inline constexpr size_t kMaxQubits = 5;

/// A non-identity N-qubit Pauli operator modulo sign, encoded as a vector
/// (x_1, ..., x_2N) over GF(2). Qubit i contributes the pair (x_i, x_{N+i}):
/// I = (0,0), X = (0,1), Y = (1,1), Z = (1,0).
class PauliPoint {
   public:
    /// Throws if coords has the wrong length or is zero.
    PauliPoint(size_t n_qubits, BinVec coords);

    /// Accepts `[+-]?[IXYZ]{N}` (the Unicode minus sign is also accepted).
    /// Throws ParseError on bad characters, empty input or the identity.
    static PauliPoint parse(std::string_view label);

    size_t n_qubits() const { return n_qubits_; }
    const BinVec &coords() const { return coords_; }
    /// Packed coordinates, coordinate j at bit (j-1).
    uint64_t packed() const { return coords_.to_word(); }

    std::string label() const;
    char letter(size_t qubit) const;

    bool operator==(const PauliPoint &other) const = default;
    auto operator<=>(const PauliPoint &other) const = default;

   private:
    size_t n_qubits_;
    BinVec coords_;
};

/// Symplectic form; 0 iff the two operators commute.
bool symplectic_product(const PauliPoint &a, const PauliPoint &b);

/// sum_i x_i x_{N+i}; 0 iff the operator is symmetric (even number of Y).
bool quad_form(const PauliPoint &p);

/// Packed helpers (coordinate j at bit j-1 of a 2N-bit word).
bool symplectic_product_packed(uint64_t a, uint64_t b, size_t n_qubits);

/// A maximal totally isotropic subspace of GF(2)^{2N}, held as its reduced
/// row echelon basis. Two generators are equal iff their subspaces are.
class Generator {
   public:
    /// Canonicalizes `basis`. Throws NotMaximalError if the rank is not N and
    /// NonCommutingError if two rows anticommute.
    static Generator from_basis(size_t n_qubits, const BinMat &basis);

    size_t n_qubits() const { return n_qubits_; }
    const BinMat &basis() const { return basis_; }
    /// Basis rows packed (coordinate j at bit j-1).
    std::vector<uint64_t> packed_rows() const;

    bool contains(const PauliPoint &p) const;

    bool operator==(const Generator &other) const = default;
    std::strong_ordering operator<=>(const Generator &other) const { return basis_ <=> other.basis_; }

   private:
    Generator(size_t n_qubits, BinMat basis) : n_qubits_(n_qubits), basis_(std::move(basis)) {}
    friend std::vector<Generator> enumerate_generators(size_t n_qubits);

    size_t n_qubits_;
    BinMat basis_;
};

/// Number of generators of the polar space: prod_{i=1..N} (2^i + 1).
uint64_t generator_count(size_t n_qubits);

/// All generators for 1 <= N <= 5, sorted by canonical matrix, without
/// duplicates. Throws RangeError otherwise.
std::vector<Generator> enumerate_generators(size_t n_qubits);

/// The generator spanned by a set of pairwise commuting operators.
/// Throws NonCommutingError (naming the first offending pair),
/// NotMaximalError if the span is too small, std::invalid_argument on mixed
/// qubit counts or an empty list.
Generator generator_from_operators(std::span<const PauliPoint> ops);

/// The 2^N - 1 nonzero points of the subspace, in order of the combination
/// of basis rows (row 1, row 2, rows 1+2, row 3, ...).
std::vector<PauliPoint> generator_points(const Generator &g);

}  // namespace lgrpauli
