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

#include "lgrpauli/pluecker.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "lgrpauli/errors.hpp"

namespace lgrpauli {

SubsetIndex::SubsetIndex(size_t n_ambient, const std::vector<size_t> &members) : n_ambient_(n_ambient) {
    if (n_ambient > 31) {
        throw RangeError("SubsetIndex: ambient size too large");
    }
    size_t prev = 0;
    for (size_t j : members) {
        if (j <= prev || j > n_ambient) {
            throw std::invalid_argument("SubsetIndex: members must be strictly increasing within 1.." +
                                        std::to_string(n_ambient));
        }
        key_ |= uint32_t{1} << (j - 1);
        prev = j;
    }
}

SubsetIndex SubsetIndex::from_key(size_t n_ambient, uint32_t key) {
    if (n_ambient > 31 || (key >> n_ambient) != 0) {
        throw std::invalid_argument("SubsetIndex: key out of range");
    }
    SubsetIndex s;
    s.n_ambient_ = n_ambient;
    s.key_ = key;
    return s;
}

size_t SubsetIndex::size() const { return std::popcount(key_); }

std::vector<size_t> SubsetIndex::members() const {
    std::vector<size_t> out;
    for (size_t j = 1; j <= n_ambient_; j++) {
        if (key_ >> (j - 1) & 1) {
            out.push_back(j);
        }
    }
    return out;
}

std::string SubsetIndex::compact() const {
    auto ms = members();
    bool single_digits = n_ambient_ < 10;
    std::string out;
    for (size_t k = 0; k < ms.size(); k++) {
        if (!single_digits && k > 0) {
            out += '.';
        }
        out += std::to_string(ms[k]);
    }
    return out;
}

std::string SubsetIndex::to_string() const {
    std::string out = "{";
    auto ms = members();
    for (size_t k = 0; k < ms.size(); k++) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(ms[k]);
    }
    return out + "}";
}

size_t binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    size_t r = 1;
    for (size_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<uint32_t> subsets_by_key(size_t n, size_t k) {
    std::vector<uint32_t> out;
    for (uint32_t key = 0; key < (uint32_t{1} << n); key++) {
        if (static_cast<size_t>(std::popcount(key)) == k) {
            out.push_back(key);
        }
    }
    return out;
}

namespace {

void lex_rec(size_t n, size_t k, size_t next, uint32_t acc, std::vector<uint32_t> &out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t j = next; j + k - 1 <= n; j++) {
        lex_rec(n, k - 1, j + 1, acc | (uint32_t{1} << (j - 1)), out);
    }
}

}  // namespace

std::vector<uint32_t> subsets_lex(size_t n, size_t k) {
    std::vector<uint32_t> out;
    lex_rec(n, k, 1, 0, out);
    return out;
}

size_t subset_rank(uint32_t key) {
    size_t r = 0;
    size_t t = 0;
    for (size_t c = 0; c < 32; c++) {
        if (key >> c & 1) {
            t++;
            r += binomial(c, t);
        }
    }
    return r;
}

PlueckerVec::PlueckerVec(size_t n_qubits, BinVec coords) : n_qubits_(n_qubits), coords_(std::move(coords)) {
    if (coords_.size() != binomial(2 * n_qubits, n_qubits)) {
        throw std::invalid_argument("PlueckerVec: expected C(2N,N) coordinates");
    }
    if (coords_.is_zero()) {
        throw std::invalid_argument("PlueckerVec: zero vector is not a projective point");
    }
}

bool PlueckerVec::at_key(uint32_t key) const {
    if (static_cast<size_t>(std::popcount(key)) != n_qubits_ || (key >> (2 * n_qubits_)) != 0) {
        throw std::invalid_argument("PlueckerVec: key is not an N-subset of {1..2N}");
    }
    return coords_.get(subset_rank(key) + 1);
}

bool PlueckerVec::at(const SubsetIndex &s) const {
    if (s.n_ambient() != 2 * n_qubits_) {
        throw std::invalid_argument("PlueckerVec: subset has the wrong ambient size");
    }
    return at_key(s.key());
}

namespace {

constexpr uint64_t kInWordKeep[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Exterior algebra element over subsets of {0..width-1}, one bit per subset.
using ExteriorVec = std::vector<uint64_t>;

// cur ∧ e_c, accumulated into out (signs vanish over GF(2)).
void wedge_basis_vector(const ExteriorVec &cur, size_t c, ExteriorVec &out) {
    if (c < 6) {
        size_t shift = size_t{1} << c;
        for (size_t w = 0; w < cur.size(); w++) {
            out[w] ^= (cur[w] & kInWordKeep[c]) << shift;
        }
    } else {
        size_t stride = size_t{1} << (c - 6);
        for (size_t w = 0; w < cur.size(); w++) {
            if (!(w & stride)) {
                out[w + stride] ^= cur[w];
            }
        }
    }
}

void check_pluecker_range(size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw RangeError("Plücker embedding supports 1 <= N <= 5, got " + std::to_string(n_qubits));
    }
}

void check_relation_range(size_t n_qubits, const char *what) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw RangeError(std::string(what) + ": N must be in 2..5, got " + std::to_string(n_qubits));
    }
}

}  // namespace

BinVec wedge_packed(std::span<const uint64_t> rows, size_t n_qubits) {
    check_pluecker_range(n_qubits);
    size_t width = 2 * n_qubits;
    size_t words = std::max<size_t>(1, (size_t{1} << width) / 64);
    ExteriorVec cur(words, 0);
    cur[0] = 1;
    for (uint64_t row : rows) {
        ExteriorVec next(words, 0);
        for (size_t c = 0; c < width; c++) {
            if (row >> c & 1) {
                wedge_basis_vector(cur, c, next);
            }
        }
        cur = std::move(next);
    }
    BinVec out(binomial(width, n_qubits));
    size_t pos = 1;
    for (uint32_t key : subsets_by_key(width, n_qubits)) {
        if (cur[key / 64] >> (key % 64) & 1) {
            out.set(pos, true);
        }
        pos++;
    }
    return out;
}

PlueckerVec embed(const Generator &g) {
    std::vector<uint64_t> rows = g.packed_rows();
    return PlueckerVec(g.n_qubits(), wedge_packed(rows, g.n_qubits()));
}

bool PlueckerRelation::evaluate(const PlueckerVec &v) const {
    bool acc = false;
    for (const auto &[s, t] : terms) {
        acc ^= v.at(s) && v.at(t);
    }
    return acc;
}

std::string PlueckerRelation::to_string() const {
    std::string out;
    for (size_t k = 0; k < terms.size(); k++) {
        if (k > 0) {
            out += " + ";
        }
        out += "p" + terms[k].first.compact() + "*p" + terms[k].second.compact();
    }
    return out + " = 0";
}

namespace {

using Monomial = uint64_t;  // (smaller key << 32) | larger key

Monomial make_monomial(uint32_t a, uint32_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    return (uint64_t{a} << 32) | b;
}

struct RawRelation {
    uint32_t meet;  // I ∩ J
    uint32_t join;  // I ∪ J
    std::vector<Monomial> monomials;  // sorted, nonzero after cancellation
};

// All nonzero relations in generation order, before any deduplication.
std::vector<RawRelation> raw_relations(size_t n_qubits) {
    size_t width = 2 * n_qubits;
    std::vector<RawRelation> out;
    for (uint32_t lower : subsets_lex(width, n_qubits - 1)) {
        for (uint32_t upper : subsets_lex(width, n_qubits + 1)) {
            std::vector<Monomial> monos;
            for (size_t j = 0; j < width; j++) {
                uint32_t bit = uint32_t{1} << j;
                if (!(upper & bit) || (lower & bit)) {
                    continue;
                }
                monos.push_back(make_monomial(lower | bit, upper & ~bit));
            }
            std::sort(monos.begin(), monos.end());
            // Cancel equal pairs.
            std::vector<Monomial> reduced;
            for (size_t k = 0; k < monos.size();) {
                size_t e = k;
                while (e < monos.size() && monos[e] == monos[k]) {
                    e++;
                }
                if ((e - k) % 2 == 1) {
                    reduced.push_back(monos[k]);
                }
                k = e;
            }
            if (!reduced.empty()) {
                out.push_back({lower & upper, lower | upper, std::move(reduced)});
            }
        }
    }
    return out;
}

PlueckerRelation to_relation(const std::vector<Monomial> &monos, size_t width) {
    PlueckerRelation r;
    for (Monomial m : monos) {
        r.terms.emplace_back(SubsetIndex::from_key(width, static_cast<uint32_t>(m >> 32)),
                             SubsetIndex::from_key(width, static_cast<uint32_t>(m & 0xFFFFFFFFu)));
    }
    return r;
}

// Sparse GF(2) elimination over sorted monomial lists; pivot = largest.
class SparseSpan {
   public:
    // Returns true (and records v) iff v is not in the current span.
    bool insert(std::vector<Monomial> v) {
        while (!v.empty()) {
            auto it = basis_.find(v.back());
            if (it == basis_.end()) {
                Monomial pivot = v.back();
                basis_.emplace(pivot, std::move(v));
                return true;
            }
            std::vector<Monomial> sum;
            std::set_symmetric_difference(v.begin(), v.end(), it->second.begin(), it->second.end(),
                                          std::back_inserter(sum));
            v = std::move(sum);
        }
        return false;
    }

   private:
    std::map<Monomial, std::vector<Monomial>> basis_;
};

}  // namespace

std::vector<PlueckerRelation> distinct_pluecker_relations(size_t n_qubits) {
    check_relation_range(n_qubits, "distinct_pluecker_relations");
    std::set<std::vector<Monomial>> seen;
    std::vector<PlueckerRelation> out;
    for (auto &raw : raw_relations(n_qubits)) {
        if (seen.insert(raw.monomials).second) {
            out.push_back(to_relation(raw.monomials, 2 * n_qubits));
        }
    }
    return out;
}

std::vector<PlueckerRelation> pluecker_relations(size_t n_qubits) {
    check_relation_range(n_qubits, "pluecker_relations");
    // All monomials of one relation share I ∩ J and I ∪ J, so independence
    // can be decided block by block.
    std::map<std::pair<uint32_t, uint32_t>, SparseSpan> blocks;
    std::vector<PlueckerRelation> out;
    for (auto &raw : raw_relations(n_qubits)) {
        if (blocks[{raw.meet, raw.join}].insert(raw.monomials)) {
            out.push_back(to_relation(raw.monomials, 2 * n_qubits));
        }
    }
    return out;
}

bool LinearConstraint::evaluate(const PlueckerVec &v) const {
    bool acc = false;
    for (const auto &s : terms) {
        acc ^= v.at(s);
    }
    return acc;
}

std::string LinearConstraint::to_string() const {
    std::string out;
    for (size_t k = 0; k < terms.size(); k++) {
        if (k > 0) {
            out += " + ";
        }
        out += "p" + terms[k].compact();
    }
    return out + " = 0";
}

std::vector<LinearConstraint> lagrangian_constraints(size_t n_qubits) {
    check_relation_range(n_qubits, "lagrangian_constraints");
    size_t width = 2 * n_qubits;
    std::vector<LinearConstraint> out;
    for (uint32_t base : subsets_lex(width, n_qubits - 2)) {
        LinearConstraint c;
        for (size_t i = 0; i < n_qubits; i++) {
            uint32_t pair = (uint32_t{1} << i) | (uint32_t{1} << (n_qubits + i));
            if (base & pair) {
                continue;
            }
            c.terms.push_back(SubsetIndex::from_key(width, base | pair));
        }
        if (c.terms.size() < 2) {
            continue;
        }
        std::sort(c.terms.begin(), c.terms.end());
        out.push_back(std::move(c));
    }
    return out;
}

BinMat constraint_matrix(size_t n_qubits) {
    auto constraints = lagrangian_constraints(n_qubits);
    size_t cols = binomial(2 * n_qubits, n_qubits);
    BinMat m(constraints.size(), cols);
    for (size_t r = 0; r < constraints.size(); r++) {
        for (const auto &s : constraints[r].terms) {
            m.set(r + 1, subset_rank(s.key()) + 1, true);
        }
    }
    return m;
}

std::vector<SubsetIndex> eliminated_indices(size_t n_qubits) {
    std::set<SubsetIndex> all;
    for (const auto &c : lagrangian_constraints(n_qubits)) {
        all.insert(c.terms.begin(), c.terms.end());
    }
    return {all.begin(), all.end()};
}

std::vector<SubsetIndex> retained_indices(size_t n_qubits) {
    auto elim = eliminated_indices(n_qubits);
    std::set<uint32_t> gone;
    for (const auto &s : elim) {
        gone.insert(s.key());
    }
    std::vector<SubsetIndex> out;
    for (uint32_t key : subsets_by_key(2 * n_qubits, n_qubits)) {
        if (!gone.count(key)) {
            out.push_back(SubsetIndex::from_key(2 * n_qubits, key));
        }
    }
    return out;
}

}  // namespace lgrpauli
