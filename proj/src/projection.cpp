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

#include "lgrpauli/projection.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "lgrpauli/errors.hpp"
#include "lgrpauli/parallel.hpp"

namespace lgrpauli {

namespace {

void check_point_range(size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw RangeError("points of PG(2^N-1,2) need 1 <= N <= 5, got " + std::to_string(n_qubits));
    }
}

uint64_t full_mask(size_t bits) { return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1; }

std::vector<uint32_t> build_display_order(size_t n) {
    size_t half = size_t{1} << (n - 1);
    uint32_t all = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> order(2 * half);
    for (size_t v = 0; v < half; v++) {
        // Digit t of v (most significant first) is membership of element t+2.
        uint32_t key = 0;
        for (size_t t = 0; t + 1 < n; t++) {
            if (v >> (n - 2 - t) & 1) {
                key |= uint32_t{1} << (t + 1);
            }
        }
        order[v] = key;
        order[half + v] = all ^ key;
    }
    return order;
}

}  // namespace

const std::vector<uint32_t> &display_order(size_t n_qubits) {
    check_point_range(n_qubits);
    static const std::array<std::vector<uint32_t>, kMaxQubits + 1> kOrders = [] {
        std::array<std::vector<uint32_t>, kMaxQubits + 1> orders;
        for (size_t n = 1; n <= kMaxQubits; n++) {
            orders[n] = build_display_order(n);
        }
        return orders;
    }();
    return kOrders[n_qubits];
}

ProjPoint::ProjPoint(size_t n_qubits, uint64_t encoding) : n_qubits_(n_qubits), encoding_(encoding) {
    check_point_range(n_qubits);
    if (encoding == 0) {
        throw std::invalid_argument("ProjPoint: the zero vector is not a projective point");
    }
    if ((encoding & ~full_mask(size_t{1} << n_qubits)) != 0) {
        throw std::invalid_argument("ProjPoint: encoding has bits beyond 2^N coordinates");
    }
}

ProjPoint ProjPoint::from_display_bits(size_t n_qubits, const BinVec &bits) {
    check_point_range(n_qubits);
    const auto &order = display_order(n_qubits);
    if (bits.size() != order.size()) {
        throw ParseError("expected " + std::to_string(order.size()) + " coordinates, got " +
                         std::to_string(bits.size()));
    }
    uint64_t enc = 0;
    for (size_t k = 0; k < order.size(); k++) {
        if (bits.get(k + 1)) {
            enc |= uint64_t{1} << order[k];
        }
    }
    if (enc == 0) {
        throw ParseError("the zero vector is not a projective point");
    }
    return ProjPoint(n_qubits, enc);
}

ProjPoint ProjPoint::parse(size_t n_qubits, std::string_view text) {
    check_point_range(n_qubits);
    size_t dim = size_t{1} << n_qubits;
    std::string bits;
    if (text.starts_with("0x") || text.starts_with("0X")) {
        std::string_view digits = text.substr(2);
        if (digits.empty()) {
            throw ParseError("empty hex point");
        }
        for (char ch : digits) {
            int value;
            if (ch >= '0' && ch <= '9') {
                value = ch - '0';
            } else if (ch >= 'a' && ch <= 'f') {
                value = ch - 'a' + 10;
            } else if (ch >= 'A' && ch <= 'F') {
                value = ch - 'A' + 10;
            } else {
                throw ParseError("bad hex digit '" + std::string(1, ch) + "'");
            }
            for (int b = 3; b >= 0; b--) {
                bits += (value >> b & 1) ? '1' : '0';
            }
        }
        // Strip the padding on the left.
        while (bits.size() > dim && bits.front() == '0') {
            bits.erase(bits.begin());
        }
        if (bits.size() > dim) {
            throw ParseError("hex point has more than " + std::to_string(dim) + " bits");
        }
        bits.insert(bits.begin(), dim - bits.size(), '0');
    } else if (text.starts_with("[")) {
        if (!text.ends_with("]")) {
            throw ParseError("unterminated point '" + std::string(text) + "'");
        }
        std::string_view body = text.substr(1, text.size() - 2);
        for (size_t k = 0; k < body.size(); k++) {
            char ch = body[k];
            if (k % 2 == 1) {
                if (ch != ':') {
                    throw ParseError("expected ':' in point '" + std::string(text) + "'");
                }
            } else if (ch == '0' || ch == '1') {
                bits += ch;
            } else {
                throw ParseError("bad coordinate '" + std::string(1, ch) + "' in point");
            }
        }
    } else {
        for (char ch : text) {
            if (ch != '0' && ch != '1') {
                throw ParseError("bad coordinate '" + std::string(1, ch) + "' in point");
            }
        }
        bits = std::string(text);
    }
    return from_display_bits(n_qubits, BinVec::from_string(bits));
}

bool ProjPoint::at(const SubsetIndex &subset) const {
    if (subset.n_ambient() != n_qubits_) {
        throw std::invalid_argument("ProjPoint: subset must be of {1..N}");
    }
    return at_key(subset.key());
}

bool ProjPoint::at_display(size_t position) const {
    const auto &order = display_order(n_qubits_);
    if (position < 1 || position > order.size()) {
        throw std::out_of_range("ProjPoint: display position out of range");
    }
    return at_key(order[position - 1]);
}

BinVec ProjPoint::coords() const { return BinVec::from_word(encoding_, dimension()); }

BinVec ProjPoint::display_bits() const {
    const auto &order = display_order(n_qubits_);
    BinVec out(order.size());
    for (size_t k = 0; k < order.size(); k++) {
        if (at_key(order[k])) {
            out.set(k + 1, true);
        }
    }
    return out;
}

std::string ProjPoint::to_string() const {
    std::string out = "[";
    std::string bits = bit_string();
    for (size_t k = 0; k < bits.size(); k++) {
        if (k > 0) {
            out += ':';
        }
        out += bits[k];
    }
    return out + "]";
}

std::string ProjPoint::bit_string() const { return display_bits().to_string(); }

std::string ProjPoint::hex() const {
    std::string bits = bit_string();
    size_t digits = (bits.size() + 3) / 4;
    bits.insert(bits.begin(), digits * 4 - bits.size(), '0');
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "0x";
    for (size_t d = 0; d < digits; d++) {
        int value = 0;
        for (size_t b = 0; b < 4; b++) {
            value = value * 2 + (bits[4 * d + b] == '1');
        }
        out += kHex[value];
    }
    return out;
}

SubsetIndex principal_index(const SubsetIndex &subset) {
    size_t n = subset.n_ambient();
    uint32_t all = (uint32_t{1} << n) - 1;
    uint32_t key = (all & ~subset.key()) | (subset.key() << n);
    return SubsetIndex::from_key(2 * n, key);
}

SubsetIndex principal_subset(const SubsetIndex &pluecker_index) {
    size_t n = pluecker_index.n_ambient() / 2;
    uint32_t all = (uint32_t{1} << n) - 1;
    uint32_t low = pluecker_index.key() & all;
    uint32_t high = (pluecker_index.key() >> n) & all;
    if ((low ^ high) != all || pluecker_index.n_ambient() != 2 * n) {
        throw std::invalid_argument("p" + pluecker_index.compact() + " is not a principal-minor coordinate");
    }
    return SubsetIndex::from_key(n, high);
}

ProjPoint project(const PlueckerVec &v) {
    size_t n = v.n_qubits();
    if (n < 2) {
        throw RangeError("project: N must be at least 2");
    }
    for (const auto &c : lagrangian_constraints(n)) {
        if (c.evaluate(v)) {
            throw NotInImageError("Plücker vector violates " + c.to_string());
        }
    }
    uint64_t enc = 0;
    for (uint32_t key = 0; key < (uint32_t{1} << n); key++) {
        if (v.at(principal_index(SubsetIndex::from_key(n, key)))) {
            enc |= uint64_t{1} << key;
        }
    }
    if (enc == 0) {
        throw NotInImageError("all principal-minor coordinates vanish");
    }
    return ProjPoint(n, enc);
}

PauliPoint to_observable(const ProjPoint &p) {
    if (p.n_qubits() < 1) {
        throw RangeError("to_observable: N must be at least 1");
    }
    return PauliPoint(p.dimension() / 2, p.display_bits());
}

ChartMatrix::ChartMatrix(BinMat m) : entries(std::move(m)) {
    if (!entries.is_square()) {
        throw std::invalid_argument("ChartMatrix: matrix must be square");
    }
    if (!(entries == entries.transpose())) {
        throw std::invalid_argument("ChartMatrix: matrix must be symmetric");
    }
}

bool ChartMatrix::principal_minor(uint32_t key) const {
    std::vector<size_t> idx = SubsetIndex::from_key(size(), key).members();
    return minor(entries, idx, idx);
}

ChartMatrix chart_matrix(const ProjPoint &p) {
    if (!p.at_key(0)) {
        throw NotInImageError("point " + p.to_string() + " is off the chart (empty minor is 0)");
    }
    size_t n = p.n_qubits();
    BinMat a(n, n);
    for (size_t i = 0; i < n; i++) {
        bool di = p.at_key(uint32_t{1} << i);
        a.set(i + 1, i + 1, di);
        for (size_t j = i + 1; j < n; j++) {
            bool dj = p.at_key(uint32_t{1} << j);
            bool dij = p.at_key((uint32_t{1} << i) | (uint32_t{1} << j));
            bool off = (di && dj) ^ dij;
            a.set(i + 1, j + 1, off);
            a.set(j + 1, i + 1, off);
        }
    }
    return ChartMatrix(std::move(a));
}

Generator chart_generator(const ChartMatrix &a) {
    size_t n = a.size();
    BinMat basis(n, 2 * n);
    for (size_t i = 1; i <= n; i++) {
        basis.set(i, i, true);
        for (size_t j = 1; j <= n; j++) {
            if (a.entries.get(i, j)) {
                basis.set(i, n + j, true);
            }
        }
    }
    return Generator::from_basis(n, basis);
}

ImageTable::ImageTable(size_t n_qubits) : n_qubits_(n_qubits), generators_(enumerate_generators(n_qubits)) {
    std::vector<std::optional<ProjPoint>> pts(generators_.size());
    parallel_chunks(generators_.size(), [&](size_t, size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            pts[k] = project(embed(generators_[k]));
        }
    });
    points_.reserve(pts.size());
    for (size_t k = 0; k < pts.size(); k++) {
        points_.push_back(*pts[k]);
        if (!by_encoding_.emplace(pts[k]->encoding(), k).second) {
            injective_ = false;
        }
    }
    sorted_ = points_;
    std::sort(sorted_.begin(), sorted_.end(),
              [](const ProjPoint &a, const ProjPoint &b) { return a.encoding() < b.encoding(); });
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
}

std::optional<size_t> ImageTable::find(const ProjPoint &p) const {
    if (p.n_qubits() != n_qubits_) {
        return std::nullopt;
    }
    auto it = by_encoding_.find(p.encoding());
    if (it == by_encoding_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const ImageTable &image_table(size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw RangeError("image_table: N must be in 2..5, got " + std::to_string(n_qubits));
    }
    static std::array<std::once_flag, kMaxQubits + 1> flags;
    static std::array<std::unique_ptr<ImageTable>, kMaxQubits + 1> tables;
    std::call_once(flags[n_qubits], [&] { tables[n_qubits] = std::make_unique<ImageTable>(n_qubits); });
    return *tables[n_qubits];
}

Generator lift(const ProjPoint &p) {
    if (p.at_key(0)) {
        Generator g = chart_generator(chart_matrix(p));
        if (!(project(embed(g)) == p)) {
            throw NotInImageError("point " + p.to_string() + " is not in the image");
        }
        return g;
    }
    const ImageTable &table = image_table(p.n_qubits());
    auto k = table.find(p);
    if (!k) {
        throw NotInImageError("point " + p.to_string() + " is not in the image");
    }
    return table.generators()[*k];
}

std::vector<ProjPoint> image(size_t n_qubits) { return image_table(n_qubits).sorted_points(); }

}  // namespace lgrpauli
