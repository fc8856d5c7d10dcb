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

#include "lgrpauli/ideal.hpp"

#include <algorithm>
#include <set>

#include "lgrpauli/errors.hpp"
#include "lgrpauli/group.hpp"
#include "lgrpauli/parallel.hpp"

namespace lgrpauli {

namespace {

// Display position (1-based) of every internal key.
std::vector<size_t> display_position(size_t n) {
    const auto &order = display_order(n);
    std::vector<size_t> pos(order.size());
    for (size_t k = 0; k < order.size(); k++) {
        pos[order[k]] = k + 1;
    }
    return pos;
}

std::vector<QuadForm::Monomial> all_monomials(size_t n) {
    std::vector<QuadForm::Monomial> out;
    uint32_t vars = uint32_t{1} << n;
    for (uint32_t a = 0; a < vars; a++) {
        for (uint32_t b = a; b < vars; b++) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

BinVec form_vector(const QuadForm &q, const std::vector<QuadForm::Monomial> &basis) {
    BinVec v(basis.size());
    for (const auto &m : q.monomials()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        v.set(size_t(it - basis.begin()) + 1, true);
    }
    return v;
}

}  // namespace

QuadForm::QuadForm(size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw RangeError("QuadForm: N must be in 2..5, got " + std::to_string(n_qubits));
    }
}

QuadForm QuadForm::from_display_pairs(size_t n_qubits, std::span<const std::pair<size_t, size_t>> pairs) {
    QuadForm q(n_qubits);
    const auto &order = display_order(n_qubits);
    for (const auto &[i, j] : pairs) {
        if (i < 1 || j < 1 || i > order.size() || j > order.size()) {
            throw std::out_of_range("QuadForm: variable index out of range");
        }
        q.toggle(order[i - 1], order[j - 1]);
    }
    return q;
}

QuadForm QuadForm::from_pluecker_pairs(size_t n_qubits,
                                       std::span<const std::pair<SubsetIndex, SubsetIndex>> pairs) {
    QuadForm q(n_qubits);
    for (const auto &[s, t] : pairs) {
        if (s.n_ambient() != 2 * n_qubits || t.n_ambient() != 2 * n_qubits) {
            throw std::invalid_argument("QuadForm: Plücker index must be a subset of {1..2N}");
        }
        q.toggle(principal_subset(s).key(), principal_subset(t).key());
    }
    return q;
}

void QuadForm::toggle(uint32_t a, uint32_t b) {
    if (a >= n_vars() || b >= n_vars()) {
        throw std::out_of_range("QuadForm: variable out of range");
    }
    Monomial m = std::minmax(a, b);
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it != monomials_.end() && *it == m) {
        monomials_.erase(it);
    } else {
        monomials_.insert(it, m);
    }
}

QuadForm &QuadForm::operator+=(const QuadForm &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("QuadForm: variable counts differ");
    }
    std::vector<Monomial> sum;
    std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                  other.monomials_.end(), std::back_inserter(sum));
    monomials_ = std::move(sum);
    return *this;
}

bool QuadForm::eval(const ProjPoint &p) const {
    if (p.n_qubits() != n_qubits_) {
        throw std::invalid_argument("QuadForm::eval: " + std::to_string(n_vars()) + " variables but point has " +
                                    std::to_string(p.dimension()) + " coordinates");
    }
    return eval_packed(p.encoding());
}

bool QuadForm::eval_packed(uint64_t encoding) const {
    bool acc = false;
    for (const auto &[a, b] : monomials_) {
        acc ^= (encoding >> a & 1) && (encoding >> b & 1);
    }
    return acc;
}

std::string QuadForm::to_string() const {
    if (monomials_.empty()) {
        return "0";
    }
    std::vector<size_t> pos = display_position(n_qubits_);
    std::vector<std::pair<size_t, size_t>> shown;
    for (const auto &[a, b] : monomials_) {
        shown.push_back(std::minmax(pos[a], pos[b]));
    }
    std::sort(shown.begin(), shown.end());
    std::string out;
    for (const auto &[i, j] : shown) {
        if (!out.empty()) {
            out += " + ";
        }
        if (i == j) {
            out += "x" + std::to_string(i) + "^2";
        } else {
            out += "x" + std::to_string(i) + "*x" + std::to_string(j);
        }
    }
    return out;
}

std::vector<NamedQuadForm> paper_quadrics(size_t n_qubits) {
    using Pairs = std::vector<std::pair<size_t, size_t>>;
    if (n_qubits == 3) {
        Pairs q = {{1, 5}, {2, 6}, {3, 7}, {4, 8}};
        return {{"Q", QuadForm::from_display_pairs(3, q)}};
    }
    if (n_qubits != 4) {
        throw RangeError("paper_quadrics: only N = 3 and N = 4 are tabulated");
    }
    const std::vector<std::pair<std::string, Pairs>> table = {
        {"Q1", {{12, 13}, {11, 14}, {10, 15}, {9, 16}}},
        {"Q2", {{1, 13}, {2, 14}, {3, 15}, {4, 16}}},
        {"Q3", {{1, 11}, {2, 12}, {5, 15}, {6, 16}}},
        {"Q4", {{4, 5}, {3, 6}, {2, 7}, {1, 8}}},
        {"Q5", {{1, 10}, {3, 12}, {5, 14}, {7, 16}}},
        {"Q6", {{5, 9}, {6, 10}, {7, 11}, {8, 12}}},
        {"Q7", {{3, 9}, {4, 10}, {7, 13}, {8, 14}}},
        {"Q8", {{2, 9}, {4, 11}, {6, 13}, {8, 15}}},
        {"Q9", {{1, 9}, {4, 12}, {6, 14}, {7, 15}}},
        {"Q10", {{2, 10}, {3, 11}, {5, 13}, {8, 16}}},
    };
    std::vector<NamedQuadForm> out;
    for (const auto &[name, pairs] : table) {
        out.push_back({name, QuadForm::from_display_pairs(4, pairs)});
    }
    out.push_back({"Q0", out[8].form + out[9].form});
    return out;
}

QuadForm paper_quadric(size_t n_qubits, const std::string &name) {
    for (auto &nq : paper_quadrics(n_qubits)) {
        if (nq.name == name) {
            return nq.form;
        }
    }
    throw std::invalid_argument("no quadric named " + name + " for N = " + std::to_string(n_qubits));
}

QuadForm pairing_quadric(size_t n_qubits) {
    QuadForm q(n_qubits);
    uint32_t all = (uint32_t{1} << n_qubits) - 1;
    for (uint32_t key = 0; key <= all; key++) {
        if ((key & 1) == 0) {
            q.toggle(key, all ^ key);
        }
    }
    return q;
}

std::vector<ProjPoint> zero_set(std::span<const QuadForm> forms, size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > 4) {
        throw RangeError("zero_set: full scans need 2 <= N <= 4");
    }
    for (const auto &q : forms) {
        if (q.n_qubits() != n_qubits) {
            throw std::invalid_argument("zero_set: form has the wrong variable count");
        }
    }
    uint64_t total = (uint64_t{1} << (size_t{1} << n_qubits)) - 1;
    std::vector<std::vector<uint64_t>> parts(chunk_count(total));
    parallel_chunks(total, [&](size_t chunk, size_t begin, size_t end) {
        for (uint64_t e = begin + 1; e <= end; e++) {
            bool zero = std::none_of(forms.begin(), forms.end(), [&](const QuadForm &q) { return q.eval_packed(e); });
            if (zero) {
                parts[chunk].push_back(e);
            }
        }
    });
    std::vector<ProjPoint> out;
    for (const auto &part : parts) {
        for (uint64_t e : part) {
            out.emplace_back(n_qubits, e);
        }
    }
    return out;
}

VarietyReport verify_variety(size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > 4) {
        throw RangeError("verify_variety: N must be in 2..4");
    }
    VarietyReport r;
    r.n_qubits = n_qubits;
    std::vector<QuadForm> forms;
    if (n_qubits >= 3) {
        for (auto &nq : paper_quadrics(n_qubits)) {
            if (nq.name != "Q0") {
                forms.push_back(nq.form);
            }
        }
    }
    r.quadric_count = forms.size();
    r.points_scanned = (uint64_t{1} << (size_t{1} << n_qubits)) - 1;
    std::vector<ProjPoint> zeros = zero_set(forms, n_qubits);
    std::vector<ProjPoint> img = image(n_qubits);
    r.zero_set_size = zeros.size();
    r.image_size = img.size();
    r.zero_set_equals_image = zeros == img;
    QuadForm pairing = pairing_quadric(n_qubits);
    r.pairing_vanishes_on_image =
        std::none_of(img.begin(), img.end(), [&](const ProjPoint &p) { return pairing.eval(p); });
    return r;
}

std::vector<QuadForm> vanishing_quadrics(std::span<const ProjPoint> points) {
    if (points.empty()) {
        throw std::invalid_argument("vanishing_quadrics: no points");
    }
    size_t n = points.front().n_qubits();
    std::vector<QuadForm::Monomial> monos = all_monomials(n);
    std::set<BinVec> rows;
    for (const auto &p : points) {
        if (p.n_qubits() != n) {
            throw std::invalid_argument("vanishing_quadrics: mixed dimensions");
        }
        BinVec row(monos.size());
        for (size_t k = 0; k < monos.size(); k++) {
            if (p.at_key(monos[k].first) && p.at_key(monos[k].second)) {
                row.set(k + 1, true);
            }
        }
        rows.insert(std::move(row));
    }
    BinMat eval_matrix = BinMat::from_rows(std::vector<BinVec>(rows.begin(), rows.end()), monos.size());
    BinMat ker = kernel(eval_matrix);
    std::vector<QuadForm> out;
    for (const auto &v : ker.row_list()) {
        QuadForm q(n);
        for (size_t k = 0; k < monos.size(); k++) {
            if (v.get(k + 1)) {
                q.toggle(monos[k].first, monos[k].second);
            }
        }
        out.push_back(std::move(q));
    }
    return out;
}

size_t span_rank(std::span<const QuadForm> forms) {
    if (forms.empty()) {
        return 0;
    }
    std::vector<QuadForm::Monomial> monos = all_monomials(forms.front().n_qubits());
    std::vector<BinVec> rows;
    for (const auto &q : forms) {
        rows.push_back(form_vector(q, monos));
    }
    return rank(BinMat::from_rows(std::move(rows), monos.size()));
}

bool in_span(const QuadForm &q, std::span<const QuadForm> basis) {
    std::vector<QuadForm> with(basis.begin(), basis.end());
    size_t r = span_rank(with);
    with.push_back(q);
    return span_rank(with) == r;
}

QuadForm cayley_quadric(size_t n_qubits) {
    if (n_qubits != 3 && n_qubits != 4) {
        throw RangeError("cayley_quadric: N must be 3 or 4");
    }
    size_t n = n_qubits;
    auto bar = [n](size_t k) { return n + k; };
    auto index = [&](std::vector<size_t> members) {
        for (size_t k = 4; k <= n; k++) {
            members.push_back(bar(k));
        }
        std::sort(members.begin(), members.end());
        return SubsetIndex(2 * n, members);
    };
    std::vector<std::pair<SubsetIndex, SubsetIndex>> pairs = {
        {index({1, 2, 3}), index({bar(1), bar(2), bar(3)})},
        {index({1, 2, bar(3)}), index({3, bar(1), bar(2)})},
        {index({1, 3, bar(2)}), index({2, bar(1), bar(3)})},
        {index({1, bar(2), bar(3)}), index({2, 3, bar(1)})},
    };
    return QuadForm::from_pluecker_pairs(n, pairs);
}

QuadForm substitute(const QuadForm &q, const BinMat &m) {
    size_t vars = q.n_vars();
    if (m.rows() != vars || m.cols() != vars) {
        throw std::invalid_argument("substitute: map has the wrong size");
    }
    std::vector<std::vector<uint32_t>> support(vars);
    for (size_t i = 0; i < vars; i++) {
        for (size_t a = 0; a < vars; a++) {
            if (m.get(i + 1, a + 1)) {
                support[i].push_back(uint32_t(a));
            }
        }
    }
    QuadForm out(q.n_qubits());
    for (const auto &[i, j] : q.monomials()) {
        if (i == j) {
            // (sum x_a)^2 = sum x_a^2 in characteristic 2.
            for (uint32_t a : support[i]) {
                out.toggle(a, a);
            }
            continue;
        }
        for (uint32_t a : support[i]) {
            for (uint32_t b : support[j]) {
                out.toggle(a, b);
            }
        }
    }
    return out;
}

std::vector<QuadForm> quadric_orbit(const QuadForm &q, size_t n_qubits) {
    if (q.n_qubits() != n_qubits) {
        throw std::invalid_argument("quadric_orbit: form has the wrong variable count");
    }
    std::vector<BinMat> maps;
    for (const auto &g : bfs_generators(n_qubits)) {
        maps.push_back(g.linear_map());
    }
    std::set<QuadForm> seen = {q};
    std::vector<QuadForm> queue = {q};
    for (size_t head = 0; head < queue.size(); head++) {
        for (const auto &m : maps) {
            QuadForm next = substitute(queue[head], m);
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return std::vector<QuadForm>(seen.begin(), seen.end());
}

}  // namespace lgrpauli
