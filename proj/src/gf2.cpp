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

#include "lgrpauli/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lgrpauli {

namespace {

constexpr size_t kWordBits = 64;

size_t word_count(size_t len) { return (len + kWordBits - 1) / kWordBits; }

}  // namespace

BinVec::BinVec(size_t len) : len_(len), words_(word_count(len), 0) {}

BinVec BinVec::from_string(std::string_view bits) {
    BinVec v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.set(k + 1, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("BinVec: expected '0' or '1', got '" + std::string(1, bits[k]) + "'");
        }
    }
    return v;
}

BinVec BinVec::from_word(uint64_t word, size_t len) {
    if (len > kWordBits) {
        throw std::invalid_argument("BinVec::from_word: length exceeds 64");
    }
    if (len < kWordBits && (word >> len) != 0) {
        throw std::invalid_argument("BinVec::from_word: bits set beyond length");
    }
    BinVec v(len);
    if (len > 0) {
        v.words_[0] = word;
    }
    return v;
}

BinVec BinVec::unit(size_t len, size_t j) {
    BinVec v(len);
    v.set(j, true);
    return v;
}

void BinVec::check_index(size_t j) const {
    if (j < 1 || j > len_) {
        throw std::out_of_range("BinVec: coordinate " + std::to_string(j) + " out of range 1.." + std::to_string(len_));
    }
}

bool BinVec::get(size_t j) const {
    check_index(j);
    size_t k = j - 1;
    return (words_[k / kWordBits] >> (k % kWordBits)) & 1;
}

void BinVec::set(size_t j, bool value) {
    check_index(j);
    size_t k = j - 1;
    uint64_t bit = uint64_t{1} << (k % kWordBits);
    if (value) {
        words_[k / kWordBits] |= bit;
    } else {
        words_[k / kWordBits] &= ~bit;
    }
}

void BinVec::flip(size_t j) {
    check_index(j);
    size_t k = j - 1;
    words_[k / kWordBits] ^= uint64_t{1} << (k % kWordBits);
}

bool BinVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BinVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

uint64_t BinVec::to_word() const {
    if (len_ > kWordBits) {
        throw std::logic_error("BinVec::to_word: length exceeds 64");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BinVec::to_string() const {
    std::string out(len_, '0');
    for (size_t j = 1; j <= len_; j++) {
        if (get(j)) {
            out[j - 1] = '1';
        }
    }
    return out;
}

BinVec &BinVec::operator^=(const BinVec &other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BinVec: length mismatch in xor");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BinVec::dot(const BinVec &other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BinVec: length mismatch in dot");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::strong_ordering BinVec::operator<=>(const BinVec &other) const {
    if (len_ != other.len_) {
        return len_ <=> other.len_;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // Lowest differing bit is the earliest differing coordinate.
            uint64_t low = diff & (~diff + 1);
            return (words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

size_t BinVec::hash() const {
    size_t h = std::hash<size_t>{}(len_);
    for (uint64_t w : words_) {
        h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

BinMat::BinMat(size_t rows, size_t cols) : cols_(cols), rows_(rows, BinVec(cols)) {}

BinMat BinMat::from_rows(std::vector<BinVec> rows, size_t cols) {
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("BinMat: row length " + std::to_string(r.size()) + " != " + std::to_string(cols));
        }
    }
    BinMat m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BinMat BinMat::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BinMat();
    }
    std::vector<BinVec> vs;
    vs.reserve(rows.size());
    for (const auto &s : rows) {
        vs.push_back(BinVec::from_string(s));
    }
    size_t cols = vs.front().size();
    return from_rows(std::move(vs), cols);
}

BinMat BinMat::identity(size_t n) {
    BinMat m(n, n);
    for (size_t i = 1; i <= n; i++) {
        m.set(i, i, true);
    }
    return m;
}

bool BinMat::get(size_t i, size_t j) const { return row(i).get(j); }

void BinMat::set(size_t i, size_t j, bool value) {
    if (i < 1 || i > rows_.size()) {
        throw std::out_of_range("BinMat: row " + std::to_string(i) + " out of range");
    }
    rows_[i - 1].set(j, value);
}

const BinVec &BinMat::row(size_t i) const {
    if (i < 1 || i > rows_.size()) {
        throw std::out_of_range("BinMat: row " + std::to_string(i) + " out of range");
    }
    return rows_[i - 1];
}

BinMat BinMat::transpose() const {
    BinMat t(cols_, rows());
    for (size_t i = 1; i <= rows(); i++) {
        for (size_t j = 1; j <= cols_; j++) {
            if (get(i, j)) {
                t.set(j, i, true);
            }
        }
    }
    return t;
}

BinMat BinMat::submatrix(std::span<const size_t> row_set, std::span<const size_t> col_set) const {
    BinMat s(row_set.size(), col_set.size());
    for (size_t a = 0; a < row_set.size(); a++) {
        const BinVec &r = row(row_set[a]);
        for (size_t b = 0; b < col_set.size(); b++) {
            if (r.get(col_set[b])) {
                s.rows_[a].set(b + 1, true);
            }
        }
    }
    return s;
}

BinMat operator*(const BinMat &a, const BinMat &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("BinMat: dimension mismatch in product");
    }
    BinMat out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 1; k <= a.cols(); k++) {
            if (a.rows_[i].get(k)) {
                out.rows_[i] ^= b.rows_[k - 1];
            }
        }
    }
    return out;
}

std::strong_ordering BinMat::operator<=>(const BinMat &other) const {
    if (auto c = rows() <=> other.rows(); c != 0) {
        return c;
    }
    if (auto c = cols_ <=> other.cols_; c != 0) {
        return c;
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (auto c = rows_[i] <=> other.rows_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string BinMat::to_string() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

namespace {

// In-place elimination to reduced row echelon form; returns pivot columns
// (1-based) in row order. Nonzero rows end up first.
std::vector<size_t> eliminate(std::vector<BinVec> &rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 1; c <= cols && next < rows.size(); c++) {
        size_t found = rows.size();
        for (size_t r = next; r < rows.size(); r++) {
            if (rows[r].get(c)) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

}  // namespace

size_t rank(const BinMat &m) {
    std::vector<BinVec> rows = m.row_list();
    return eliminate(rows, m.cols()).size();
}

BinMat rref(const BinMat &m, ZeroRows zero_rows) {
    std::vector<BinVec> rows = m.row_list();
    size_t r = eliminate(rows, m.cols()).size();
    if (zero_rows == ZeroRows::kDrop) {
        rows.resize(r);
    }
    return BinMat::from_rows(std::move(rows), m.cols());
}

BinMat kernel(const BinMat &m) {
    std::vector<BinVec> rows = m.row_list();
    std::vector<size_t> pivots = eliminate(rows, m.cols());
    std::vector<bool> is_pivot(m.cols() + 1, false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<BinVec> basis;
    for (size_t free = 1; free <= m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        BinVec v(m.cols());
        v.set(free, true);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (rows[r].get(free)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return BinMat::from_rows(std::move(basis), m.cols());
}

bool det(const BinMat &m) {
    if (!m.is_square()) {
        throw std::invalid_argument(
            "det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not square");
    }
    return rank(m) == m.rows();
}

bool minor(const BinMat &m, std::span<const size_t> row_set, std::span<const size_t> col_set) {
    if (row_set.size() != col_set.size()) {
        throw std::invalid_argument("minor: row and column sets differ in size");
    }
    for (size_t i : row_set) {
        if (i < 1 || i > m.rows()) {
            throw std::out_of_range("minor: row index " + std::to_string(i) + " out of range");
        }
    }
    for (size_t j : col_set) {
        if (j < 1 || j > m.cols()) {
            throw std::out_of_range("minor: column index " + std::to_string(j) + " out of range");
        }
    }
    if (row_set.empty()) {
        return true;
    }
    return det(m.submatrix(row_set, col_set));
}

bool det_packed(std::span<const uint64_t> rows, size_t n) {
    uint64_t work[64];
    std::copy(rows.begin(), rows.begin() + n, work);
    for (size_t c = 0; c < n; c++) {
        uint64_t bit = uint64_t{1} << c;
        size_t p = c;
        while (p < n && !(work[p] & bit)) {
            p++;
        }
        if (p == n) {
            return false;
        }
        std::swap(work[c], work[p]);
        for (size_t r = c + 1; r < n; r++) {
            if (work[r] & bit) {
                work[r] ^= work[c];
            }
        }
    }
    return true;
}

size_t rank_packed(std::vector<uint64_t> rows) {
    size_t r = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        uint64_t v = rows[i];
        if (v == 0) {
            continue;
        }
        uint64_t low = v & (~v + 1);
        for (size_t k = i + 1; k < rows.size(); k++) {
            if (rows[k] & low) {
                rows[k] ^= v;
            }
        }
        r++;
    }
    return r;
}

}  // namespace lgrpauli
