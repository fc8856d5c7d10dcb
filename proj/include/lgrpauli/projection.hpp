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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lgrpauli/gf2.hpp"
#include "lgrpauli/pauli.hpp"
#include "lgrpauli/pluecker.hpp"

namespace lgrpauli {

/// A point of PG(2^N - 1, 2) whose coordinates are indexed by subsets
/// I of {1..N}.
///
/// Internally coordinate I sits at position key(I) (bit j-1 for member j).
/// The display order used for printing and for observables lists first the
/// subsets not containing 1, ascending as binary numbers with element 1 the
/// most significant digit, then their complements in the same order. For
/// N = 3 that is x_1 = p123, x_2 = p126, ..., x_8 = p234.
///
/// The integer encoding (`encoding()`) has bit key(I) set iff coordinate I
/// is 1; orbit representatives minimise it.
class ProjPoint {
   public:
    /// `encoding` must be nonzero and fit in 2^N bits. 1 <= N <= 5.
    ProjPoint(size_t n_qubits, uint64_t encoding);

    /// Accepts a display-order bit string ("0010"), the bracketed form
    /// ("[0:0:1:0]") or hex of the display bits ("0x2"). Throws ParseError.
    static ProjPoint parse(size_t n_qubits, std::string_view text);
    static ProjPoint from_display_bits(size_t n_qubits, const BinVec &bits);

    size_t n_qubits() const { return n_qubits_; }
    size_t dimension() const { return size_t{1} << n_qubits_; }
    uint64_t encoding() const { return encoding_; }

    /// Coordinate of the subset with the given key.
    bool at_key(uint32_t key) const { return encoding_ >> key & 1; }
    bool at(const SubsetIndex &subset) const;
    /// 1-based display position.
    bool at_display(size_t position) const;

    /// Internal-order coordinates (coordinate key+1 holds subset `key`).
    BinVec coords() const;
    BinVec display_bits() const;
    /// "[0:0:1:0]".
    std::string to_string() const;
    /// "0010".
    std::string bit_string() const;
    /// Display bits as a hexadecimal number, first coordinate most
    /// significant, zero-padded to ceil(2^N / 4) digits, with "0x" prefix.
    std::string hex() const;

    bool operator==(const ProjPoint &other) const = default;
    auto operator<=>(const ProjPoint &other) const = default;

   private:
    size_t n_qubits_;
    uint64_t encoding_;
};

/// Subset keys of {1..N} in display order (position 1 first).
const std::vector<uint32_t> &display_order(size_t n_qubits);

/// J = ({1..N} \ I) ∪ {N + i : i in I}: the Plücker coordinate equal to the
/// principal minor on I of the chart matrix. `subset` is a subset of {1..N}.
SubsetIndex principal_index(const SubsetIndex &subset);
/// Inverse of principal_index. Throws std::invalid_argument if the
/// coordinate is not principal (contains both or neither of some i, N+i).
SubsetIndex principal_subset(const SubsetIndex &pluecker_index);

/// Keeps the principal-minor coordinates. Throws NotInImageError if `v`
/// violates a Lagrangian constraint or all retained coordinates vanish.
ProjPoint project(const PlueckerVec &v);

/// Reads the display-order coordinates (x_1, ..., x_2M), M = 2^(N-1), as a
/// Pauli operator on M qubits.
PauliPoint to_observable(const ProjPoint &p);

/// Symmetric N x N matrix of the affine chart where the empty principal
/// minor is 1.
struct ChartMatrix {
    BinMat entries;

    /// Throws if `m` is not square and symmetric.
    explicit ChartMatrix(BinMat m);
    size_t size() const { return entries.rows(); }
    /// Principal minor on a subset of {1..N} given by key.
    bool principal_minor(uint32_t key) const;
};

/// Reconstructs the chart matrix: a_ii = Δ_i, a_ij = Δ_i Δ_j + Δ_ij.
/// Throws NotInImageError if the empty coordinate of `p` is 0.
ChartMatrix chart_matrix(const ProjPoint &p);

/// The generator spanned by u_i = e_i + sum_j a_ij e_{N+j}.
Generator chart_generator(const ChartMatrix &a);

/// Every generator with its image point, built once per N and shared.
class ImageTable {
   public:
    explicit ImageTable(size_t n_qubits);

    size_t n_qubits() const { return n_qubits_; }
    const std::vector<Generator> &generators() const { return generators_; }
    /// Image point of generators()[k].
    const std::vector<ProjPoint> &points() const { return points_; }
    /// Image points sorted by encoding.
    const std::vector<ProjPoint> &sorted_points() const { return sorted_; }
    /// False if two generators share an image point.
    bool injective() const { return injective_; }

    std::optional<size_t> find(const ProjPoint &p) const;
    bool contains(const ProjPoint &p) const { return find(p).has_value(); }

   private:
    size_t n_qubits_;
    std::vector<Generator> generators_;
    std::vector<ProjPoint> points_;
    std::vector<ProjPoint> sorted_;
    std::unordered_map<uint64_t, size_t> by_encoding_;
    bool injective_ = true;
};

/// Shared table for 2 <= N <= 5; built on first use, thread-safe.
const ImageTable &image_table(size_t n_qubits);

/// The unique generator mapping to `p`. Uses the chart when the empty
/// coordinate is 1 and the generator table otherwise. Throws
/// NotInImageError if `p` is not in the image.
Generator lift(const ProjPoint &p);

/// project(embed(g)) over all generators, sorted by encoding.
std::vector<ProjPoint> image(size_t n_qubits);

}  // namespace lgrpauli
