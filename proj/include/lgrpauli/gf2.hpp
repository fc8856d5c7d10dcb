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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lgrpauli {

/// A vector over GF(2), bit-packed.
///
/// Coordinates are addressed 1-based (`get(1)` is the first coordinate).
/// Ordering is lexicographic on coordinates, first coordinate most
/// significant, with 0 < 1; vectors of different length order by length.
class BinVec {
   public:
    BinVec() = default;
    explicit BinVec(size_t len);

    /// Parses a string of '0'/'1' characters; coordinate 1 is the first char.
    static BinVec from_string(std::string_view bits);
    /// Coordinate j is bit (j-1) of `word`. Requires len <= 64.
    static BinVec from_word(uint64_t word, size_t len);
    static BinVec unit(size_t len, size_t j);

    size_t size() const { return len_; }
    bool get(size_t j) const;
    void set(size_t j, bool value);
    void flip(size_t j);

    bool is_zero() const;
    size_t weight() const;
    /// Packed form with coordinate j at bit (j-1). Requires size() <= 64.
    uint64_t to_word() const;
    std::string to_string() const;

    BinVec &operator^=(const BinVec &other);
    friend BinVec operator^(BinVec a, const BinVec &b) {
        a ^= b;
        return a;
    }
    /// Standard dot product over GF(2).
    bool dot(const BinVec &other) const;

    bool operator==(const BinVec &other) const = default;
    std::strong_ordering operator<=>(const BinVec &other) const;

    size_t hash() const;

    std::span<const uint64_t> words() const { return words_; }

   private:
    void check_index(size_t j) const;
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense matrix over GF(2) stored as a list of rows.
class BinMat {
   public:
    BinMat() = default;
    BinMat(size_t rows, size_t cols);
    /// All rows must have length `cols`.
    static BinMat from_rows(std::vector<BinVec> rows, size_t cols);
    /// Rows given as '0'/'1' strings of equal length.
    static BinMat from_strings(const std::vector<std::string> &rows);
    static BinMat identity(size_t n);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows() == cols_; }

    /// 1-based entry access.
    bool get(size_t i, size_t j) const;
    void set(size_t i, size_t j, bool value);

    /// 1-based row access.
    const BinVec &row(size_t i) const;
    const std::vector<BinVec> &row_list() const { return rows_; }

    BinMat transpose() const;
    /// Selects rows and columns (1-based indices, in the given order).
    BinMat submatrix(std::span<const size_t> row_set, std::span<const size_t> col_set) const;

    friend BinMat operator*(const BinMat &a, const BinMat &b);

    bool operator==(const BinMat &other) const = default;
    std::strong_ordering operator<=>(const BinMat &other) const;

    std::string to_string() const;

   private:
    size_t cols_ = 0;
    std::vector<BinVec> rows_;
};

enum class ZeroRows { kDrop, kKeep };

size_t rank(const BinMat &m);
/// Reduced row echelon form. With ZeroRows::kKeep the result has the same
/// row count as `m` (zero rows at the bottom).
BinMat rref(const BinMat &m, ZeroRows zero_rows = ZeroRows::kDrop);
/// Basis of the right null space {x : m x = 0}, one vector per row.
BinMat kernel(const BinMat &m);
/// Throws std::invalid_argument for non-square input.
bool det(const BinMat &m);
/// Determinant of the submatrix on 1-based row set I and column set J.
/// The empty minor is 1.
bool minor(const BinMat &m, std::span<const size_t> row_set, std::span<const size_t> col_set);

/// Determinant of a small square matrix given as packed rows (row r, bit c
/// = entry (r+1, c+1)). Used on hot paths; n <= 64.
bool det_packed(std::span<const uint64_t> rows, size_t n);
/// Rank of a list of packed vectors.
size_t rank_packed(std::vector<uint64_t> rows);

}  // namespace lgrpauli

template <>
struct std::hash<lgrpauli::BinVec> {
    size_t operator()(const lgrpauli::BinVec &v) const noexcept { return v.hash(); }
};
