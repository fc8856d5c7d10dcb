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

#include "lgrpauli/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "lgrpauli/errors.hpp"
#include "lgrpauli/parallel.hpp"

namespace lgrpauli {

PauliPoint::PauliPoint(size_t n_qubits, BinVec coords) : n_qubits_(n_qubits), coords_(std::move(coords)) {
    if (n_qubits_ == 0 || coords_.size() != 2 * n_qubits_) {
        throw std::invalid_argument("PauliPoint: expected " + std::to_string(2 * n_qubits_) + " coordinates");
    }
    if (coords_.is_zero()) {
        throw std::invalid_argument("PauliPoint: the identity operator is not a point");
    }
}

PauliPoint PauliPoint::parse(std::string_view label) {
    if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
        label.remove_prefix(1);
    } else if (label.starts_with("−")) {
        label.remove_prefix(std::string_view("−").size());
    }
    if (label.empty()) {
        throw ParseError("empty Pauli label");
    }
    size_t n = label.size();
    BinVec v(2 * n);
    for (size_t i = 0; i < n; i++) {
        switch (label[i]) {
            case 'I':
                break;
            case 'X':
                v.set(n + i + 1, true);
                break;
            case 'Y':
                v.set(i + 1, true);
                v.set(n + i + 1, true);
                break;
            case 'Z':
                v.set(i + 1, true);
                break;
            default:
                throw ParseError("bad character '" + std::string(1, label[i]) + "' in Pauli label '" +
                                 std::string(label) + "'");
        }
    }
    if (v.is_zero()) {
        throw ParseError("Pauli label '" + std::string(label) + "' is the identity");
    }
    return PauliPoint(n, std::move(v));
}

char PauliPoint::letter(size_t qubit) const {
    bool z = coords_.get(qubit);
    bool x = coords_.get(n_qubits_ + qubit);
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(z ? 2 : 0) | (x ? 1 : 0)];
}

std::string PauliPoint::label() const {
    std::string out;
    out.reserve(n_qubits_);
    for (size_t q = 1; q <= n_qubits_; q++) {
        out += letter(q);
    }
    return out;
}

bool symplectic_product_packed(uint64_t a, uint64_t b, size_t n_qubits) {
    uint64_t full = (n_qubits * 2 >= 64) ? ~uint64_t{0} : ((uint64_t{1} << (2 * n_qubits)) - 1);
    uint64_t swapped = ((b << n_qubits) | (b >> n_qubits)) & full;
    return std::popcount(a & swapped) & 1;
}

bool symplectic_product(const PauliPoint &a, const PauliPoint &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("symplectic_product: qubit counts differ");
    }
    size_t n = a.n_qubits();
    bool acc = false;
    for (size_t i = 1; i <= n; i++) {
        acc ^= (a.coords().get(i) && b.coords().get(n + i)) ^ (a.coords().get(n + i) && b.coords().get(i));
    }
    return acc;
}

bool quad_form(const PauliPoint &p) {
    size_t n = p.n_qubits();
    bool acc = false;
    for (size_t i = 1; i <= n; i++) {
        acc ^= p.coords().get(i) && p.coords().get(n + i);
    }
    return acc;
}

Generator Generator::from_basis(size_t n_qubits, const BinMat &basis) {
    if (basis.cols() != 2 * n_qubits) {
        throw std::invalid_argument("Generator: basis must have 2N columns");
    }
    for (size_t i = 1; i <= basis.rows(); i++) {
        for (size_t j = i + 1; j <= basis.rows(); j++) {
            const BinVec &a = basis.row(i);
            const BinVec &b = basis.row(j);
            if (a.is_zero() || b.is_zero()) {
                continue;
            }
            if (symplectic_product(PauliPoint(n_qubits, a), PauliPoint(n_qubits, b))) {
                throw NonCommutingError(PauliPoint(n_qubits, a).label(), PauliPoint(n_qubits, b).label());
            }
        }
    }
    BinMat canonical = rref(basis);
    if (canonical.rows() != n_qubits) {
        throw NotMaximalError("span has dimension " + std::to_string(canonical.rows()) + ", expected " +
                              std::to_string(n_qubits));
    }
    return Generator(n_qubits, std::move(canonical));
}

std::vector<uint64_t> Generator::packed_rows() const {
    std::vector<uint64_t> out;
    out.reserve(basis_.rows());
    for (const auto &r : basis_.row_list()) {
        out.push_back(r.to_word());
    }
    return out;
}

bool Generator::contains(const PauliPoint &p) const {
    if (p.n_qubits() != n_qubits_) {
        return false;
    }
    std::vector<uint64_t> rows = packed_rows();
    size_t r = rows.size();
    rows.push_back(p.packed());
    return rank_packed(std::move(rows)) == r;
}

uint64_t generator_count(size_t n_qubits) {
    uint64_t total = 1;
    for (size_t i = 1; i <= n_qubits; i++) {
        total *= (uint64_t{1} << i) + 1;
    }
    return total;
}

namespace {

using PackedBasis = std::array<uint32_t, kMaxQubits>;

// Depth-first extension of isotropic reduced-row-echelon prefixes. Each row
// has its pivot (lowest set bit) strictly after the previous pivot and is
// zero before it; previous rows must be zero at the new pivot. Every
// canonical basis is therefore produced exactly once.
class GeneratorSearch {
   public:
    explicit GeneratorSearch(size_t n) : n_(n), width_(2 * n), full_((uint32_t{1} << (2 * n)) - 1) {}

    // Candidate rows for position `depth` given the rows already chosen.
    template <typename F>
    void for_each_extension(const PackedBasis &rows, size_t depth, size_t first_pivot, F &&f) const {
        uint32_t used = 0;
        for (size_t k = 0; k < depth; k++) {
            used |= rows[k];
        }
        for (size_t c = first_pivot; c + (n_ - depth) <= width_; c++) {
            uint32_t pivot = uint32_t{1} << c;
            if (used & pivot) {
                continue;
            }
            uint32_t above = full_ & ~((pivot << 1) - 1);
            uint32_t f_bits = 0;
            while (true) {
                uint32_t v = pivot | f_bits;
                bool ok = true;
                for (size_t k = 0; k < depth && ok; k++) {
                    ok = !symplectic_product_packed(v, rows[k], n_);
                }
                if (ok) {
                    f(c, v);
                }
                if (f_bits == above) {
                    break;
                }
                f_bits = (f_bits - above) & above;
            }
        }
    }

    void extend(PackedBasis &rows, size_t depth, size_t first_pivot, std::vector<PackedBasis> &out) const {
        if (depth == n_) {
            out.push_back(rows);
            return;
        }
        for_each_extension(rows, depth, first_pivot, [&](size_t c, uint32_t v) {
            rows[depth] = v;
            extend(rows, depth + 1, c + 1, out);
        });
    }

   private:
    size_t n_;
    size_t width_;
    uint32_t full_;
};

// Row key with coordinate 1 as the most significant bit, so integer order
// equals the lexicographic order on coordinates.
uint32_t lex_key(uint32_t row, size_t width) {
    uint32_t key = 0;
    for (size_t j = 0; j < width; j++) {
        if (row >> j & 1) {
            key |= uint32_t{1} << (width - 1 - j);
        }
    }
    return key;
}

}  // namespace

std::vector<Generator> enumerate_generators(size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw RangeError("enumerate_generators: N must be in 1..5, got " + std::to_string(n_qubits));
    }
    GeneratorSearch search(n_qubits);
    PackedBasis seed{};
    std::vector<std::pair<size_t, uint32_t>> first_rows;
    search.for_each_extension(seed, 0, 0, [&](size_t c, uint32_t v) { first_rows.emplace_back(c, v); });

    std::vector<std::vector<PackedBasis>> partial(chunk_count(first_rows.size()));
    parallel_chunks(first_rows.size(), [&](size_t chunk, size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            PackedBasis rows{};
            rows[0] = first_rows[k].second;
            search.extend(rows, 1, first_rows[k].first + 1, partial[chunk]);
        }
    });

    size_t width = 2 * n_qubits;
    std::vector<std::pair<PackedBasis, PackedBasis>> keyed;
    for (const auto &part : partial) {
        for (const auto &rows : part) {
            PackedBasis key{};
            for (size_t k = 0; k < n_qubits; k++) {
                key[k] = lex_key(rows[k], width);
            }
            keyed.emplace_back(key, rows);
        }
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<Generator> out;
    out.reserve(keyed.size());
    for (const auto &[key, rows] : keyed) {
        std::vector<BinVec> basis;
        basis.reserve(n_qubits);
        for (size_t k = 0; k < n_qubits; k++) {
            basis.push_back(BinVec::from_word(rows[k], width));
        }
        out.push_back(Generator(n_qubits, BinMat::from_rows(std::move(basis), width)));
    }
    return out;
}

Generator generator_from_operators(std::span<const PauliPoint> ops) {
    if (ops.empty()) {
        throw std::invalid_argument("generator_from_operators: no operators given");
    }
    size_t n = ops.front().n_qubits();
    for (const auto &p : ops) {
        if (p.n_qubits() != n) {
            throw std::invalid_argument("generator_from_operators: operators have mixed qubit counts");
        }
    }
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (symplectic_product(ops[i], ops[j])) {
                throw NonCommutingError(ops[i].label(), ops[j].label());
            }
        }
    }
    std::vector<BinVec> rows;
    rows.reserve(ops.size());
    for (const auto &p : ops) {
        rows.push_back(p.coords());
    }
    return Generator::from_basis(n, BinMat::from_rows(std::move(rows), 2 * n));
}

std::vector<PauliPoint> generator_points(const Generator &g) {
    size_t n = g.n_qubits();
    std::vector<PauliPoint> out;
    out.reserve((size_t{1} << n) - 1);
    for (uint32_t combo = 1; combo < (uint32_t{1} << n); combo++) {
        BinVec v(2 * n);
        for (size_t k = 0; k < n; k++) {
            if (combo >> k & 1) {
                v ^= g.basis().row(k + 1);
            }
        }
        out.emplace_back(n, std::move(v));
    }
    return out;
}

}  // namespace lgrpauli
