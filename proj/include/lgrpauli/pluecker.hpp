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
#include <string>
#include <utility>
#include <vector>

#include "lgrpauli/gf2.hpp"
#include "lgrpauli/pauli.hpp"

namespace lgrpauli {

/// A subset of {1, ..., n_ambient}. Its key is sum_{j in S} 2^(j-1); keys
/// order subsets and index Plücker coordinates.
class SubsetIndex {
   public:
    SubsetIndex() = default;
    /// Members must be strictly increasing and within 1..n_ambient.
    SubsetIndex(size_t n_ambient, const std::vector<size_t> &members);
    static SubsetIndex from_key(size_t n_ambient, uint32_t key);

    size_t n_ambient() const { return n_ambient_; }
    uint32_t key() const { return key_; }
    size_t size() const;
    bool contains(size_t j) const { return j >= 1 && j <= n_ambient_ && (key_ >> (j - 1) & 1); }
    std::vector<size_t> members() const;

    /// "125" when every member is a single digit, else "1.2.10".
    std::string compact() const;
    /// "{1,2,5}".
    std::string to_string() const;

    bool operator==(const SubsetIndex &other) const = default;
    auto operator<=>(const SubsetIndex &other) const { return std::pair(n_ambient_, key_) <=> std::pair(other.n_ambient_, other.key_); }

   private:
    size_t n_ambient_ = 0;
    uint32_t key_ = 0;
};

size_t binomial(size_t n, size_t k);

/// All k-subsets of {1..n} as keys, ascending key order.
std::vector<uint32_t> subsets_by_key(size_t n, size_t k);
/// All k-subsets of {1..n} as keys, lexicographic order of member lists.
std::vector<uint32_t> subsets_lex(size_t n, size_t k);
/// Position of a key among subsets of the same size in ascending key order.
size_t subset_rank(uint32_t key);

/// The C(2N, N) Plücker coordinates of an N-dimensional subspace of
/// GF(2)^{2N}, indexed by N-subsets in ascending key order.
class PlueckerVec {
   public:
    /// Throws if coords has the wrong length or is zero.
    PlueckerVec(size_t n_qubits, BinVec coords);

    size_t n_qubits() const { return n_qubits_; }
    const BinVec &coords() const { return coords_; }
    bool at(const SubsetIndex &s) const;
    bool at_key(uint32_t key) const;

    bool operator==(const PlueckerVec &other) const = default;
    auto operator<=>(const PlueckerVec &other) const = default;

   private:
    size_t n_qubits_;
    BinVec coords_;
};

/// Maximal minors of the canonical basis of `g`.
PlueckerVec embed(const Generator &g);

/// Maximal minors of an N x 2N matrix given as packed rows, in coordinate
/// order. Zero when the rows are dependent.
BinVec wedge_packed(std::span<const uint64_t> rows, size_t n_qubits);

/// A quadratic Plücker relation over GF(2): sum of p_S p_T over its terms.
struct PlueckerRelation {
    std::vector<std::pair<SubsetIndex, SubsetIndex>> terms;

    bool evaluate(const PlueckerVec &v) const;
    std::string to_string() const;
    bool operator==(const PlueckerRelation &other) const = default;
};

/// Every distinct nonzero relation obtained from all index choices
/// (sequences i_1 < ... < i_{N-1} and j_1 < ... < j_{N+1}, lexicographic).
std::vector<PlueckerRelation> distinct_pluecker_relations(size_t n_qubits);

/// The distinct relations, keeping only those not in the GF(2) span of
/// relations generated before them. For N = 3 this is 30 three-term and
/// 5 four-term relations. 2 <= N <= 5.
std::vector<PlueckerRelation> pluecker_relations(size_t n_qubits);

/// A linear condition: the listed coordinates sum to zero.
struct LinearConstraint {
    std::vector<SubsetIndex> terms;

    bool evaluate(const PlueckerVec &v) const;
    std::string to_string() const;
    bool operator==(const LinearConstraint &other) const = default;
};

/// For every (N-2)-subset K (lexicographic), the constraint
/// sum_i p_{K + {i, N+i}} = 0 over i with i, N+i not in K. 2 <= N <= 5.
std::vector<LinearConstraint> lagrangian_constraints(size_t n_qubits);

/// Constraint coefficient matrix, one row per constraint, columns in
/// coordinate order.
BinMat constraint_matrix(size_t n_qubits);

/// Coordinates occurring in some Lagrangian constraint, ascending key.
std::vector<SubsetIndex> eliminated_indices(size_t n_qubits);
/// The complement of eliminated_indices, ascending key.
std::vector<SubsetIndex> retained_indices(size_t n_qubits);

}  // namespace lgrpauli
