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

#include "lgrpauli/orbits.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "lgrpauli/errors.hpp"
#include "lgrpauli/reference_data.hpp"

namespace lgrpauli {

namespace {

constexpr uint32_t kUnassigned = std::numeric_limits<uint32_t>::max();
constexpr size_t kMaxOrbitQubits = 4;

void check_orbit_range(size_t n) {
    if (n < 2 || n > kMaxOrbitQubits) {
        throw RangeError("orbit computations need 2 <= N <= 4, got " + std::to_string(n));
    }
}

uint64_t point_count(size_t n) { return (uint64_t{1} << (size_t{1} << n)) - 1; }

// Packed rank-one tensors v_1 ⊗ ... ⊗ v_N with every v_a nonzero.
std::vector<uint64_t> separable_vectors(size_t n) {
    std::vector<uint64_t> out = {1};
    size_t width = 1;
    for (size_t a = 0; a < n; a++) {
        std::vector<uint64_t> next;
        for (uint64_t t : out) {
            // v = (1,0), (0,1), (1,1) along the new axis.
            next.push_back(t);
            next.push_back(t << width);
            next.push_back(t | (t << width));
        }
        out = std::move(next);
        width *= 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint8_t> build_t_rank_table(size_t n) {
    std::vector<uint64_t> seps = separable_vectors(n);
    std::vector<uint8_t> dist(point_count(n) + 1, 0xFF);
    dist[0] = 0;
    std::vector<uint64_t> frontier = {0};
    uint8_t layer = 0;
    while (!frontier.empty()) {
        layer++;
        std::vector<uint64_t> next;
        for (uint64_t v : frontier) {
            for (uint64_t s : seps) {
                uint64_t w = v ^ s;
                if (dist[w] == 0xFF) {
                    dist[w] = layer;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

const std::vector<uint8_t> &t_rank_table(size_t n) {
    check_orbit_range(n);
    static std::array<std::once_flag, kMaxOrbitQubits + 1> flags;
    static std::array<std::vector<uint8_t>, kMaxOrbitQubits + 1> tables;
    std::call_once(flags[n], [&] { tables[n] = build_t_rank_table(n); });
    return tables[n];
}

}  // namespace

OrbitPartition::OrbitPartition(size_t n_qubits) : n_qubits_(n_qubits) {
    check_orbit_range(n_qubits);
    uint64_t total = point_count(n_qubits);
    orbit_of_.assign(total + 1, kUnassigned);
    std::vector<GroupElem> gens = bfs_generators(n_qubits);

    struct Raw {
        uint64_t rep;
        size_t size;
    };
    std::vector<Raw> raw;
    std::vector<uint64_t> queue;
    for (uint64_t start = 1; start <= total; start++) {
        if (orbit_of_[start] != kUnassigned) {
            continue;
        }
        uint32_t idx = uint32_t(raw.size());
        orbit_of_[start] = idx;
        queue.assign(1, start);
        for (size_t head = 0; head < queue.size(); head++) {
            for (const auto &g : gens) {
                uint64_t q = g.act_packed(queue[head]);
                if (orbit_of_[q] == kUnassigned) {
                    orbit_of_[q] = idx;
                    queue.push_back(q);
                }
            }
        }
        // Scanning upward means `start` is the orbit's minimal encoding.
        raw.push_back({start, queue.size()});
    }

    std::vector<uint32_t> order(raw.size());
    for (uint32_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return std::pair(raw[a].size, raw[a].rep) < std::pair(raw[b].size, raw[b].rep);
    });
    std::vector<uint32_t> renumber(raw.size());
    for (uint32_t k = 0; k < order.size(); k++) {
        renumber[order[k]] = k;
    }
    for (uint64_t e = 1; e <= total; e++) {
        orbit_of_[e] = renumber[orbit_of_[e]];
    }

    const ImageTable &image = image_table(n_qubits);
    std::vector<size_t> image_hits(raw.size(), 0);
    for (const auto &p : image.sorted_points()) {
        image_hits[orbit_of_[p.encoding()]]++;
    }

    const auto &trank = t_rank_table(n_qubits);
    for (uint32_t k = 0; k < order.size(); k++) {
        const Raw &r = raw[order[k]];
        ProjPoint rep(n_qubits, r.rep);
        OrbitRecord rec{k + 1, std::nullopt, r.size, rep, trank[r.rep], std::nullopt, std::nullopt, false};
        if (image_hits[k] != 0) {
            if (image_hits[k] != r.size) {
                throw MixedOrbitError("orbit " + std::to_string(k + 1) + " has " + std::to_string(image_hits[k]) +
                                      " of " + std::to_string(r.size) + " points in the image");
            }
            rec.in_image = true;
            rec.e_rank = e_rank(rep);
            rec.observable = to_observable(rep).label();
        }
        records_.push_back(std::move(rec));
    }

    for (const auto &row : known_image_orbits(n_qubits)) {
        records_[orbit_of_[row.representative(n_qubits).encoding()]].known_label = row.label;
    }
    for (const auto &known : known_other_orbits(n_qubits)) {
        std::vector<size_t> hits;
        for (size_t k = 0; k < records_.size(); k++) {
            if (!records_[k].in_image && records_[k].size == known.size) {
                hits.push_back(k);
            }
        }
        if (hits.size() == 1) {
            records_[hits[0]].known_label = known.label;
        }
    }
}

size_t OrbitPartition::orbit_id(const ProjPoint &p) const {
    if (p.n_qubits() != n_qubits_) {
        throw std::invalid_argument("OrbitPartition: dimension mismatch");
    }
    return size_t{orbit_of_[p.encoding()]} + 1;
}

std::vector<ProjPoint> OrbitPartition::members(size_t id) const {
    if (id < 1 || id > records_.size()) {
        throw std::out_of_range("OrbitPartition: no orbit " + std::to_string(id));
    }
    std::vector<ProjPoint> out;
    out.reserve(records_[id - 1].size);
    for (uint64_t e = 1; e < orbit_of_.size(); e++) {
        if (orbit_of_[e] == id - 1) {
            out.emplace_back(n_qubits_, e);
        }
    }
    return out;
}

const OrbitPartition &orbit_data(size_t n_qubits) {
    check_orbit_range(n_qubits);
    static std::array<std::once_flag, kMaxOrbitQubits + 1> flags;
    static std::array<std::unique_ptr<OrbitPartition>, kMaxOrbitQubits + 1> data;
    std::call_once(flags[n_qubits], [&] { data[n_qubits] = std::make_unique<OrbitPartition>(n_qubits); });
    return *data[n_qubits];
}

std::vector<OrbitRecord> orbit_partition(size_t n_qubits) { return orbit_data(n_qubits).records(); }

std::vector<OrbitRecord> classify_image(size_t n_qubits) {
    std::vector<OrbitRecord> out;
    for (const auto &rec : orbit_data(n_qubits).records()) {
        if (rec.in_image) {
            out.push_back(rec);
        }
    }
    return out;
}

std::vector<ProjPoint> orbit_of(const ProjPoint &p) {
    std::vector<GroupElem> gens = bfs_generators(p.n_qubits());
    std::unordered_set<uint64_t> seen = {p.encoding()};
    std::vector<uint64_t> queue = {p.encoding()};
    for (size_t head = 0; head < queue.size(); head++) {
        for (const auto &g : gens) {
            uint64_t q = g.act_packed(queue[head]);
            if (seen.insert(q).second) {
                queue.push_back(q);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<ProjPoint> out;
    out.reserve(queue.size());
    for (uint64_t e : queue) {
        out.emplace_back(p.n_qubits(), e);
    }
    return out;
}

int t_rank(const ProjPoint &p) { return t_rank_table(p.n_qubits())[p.encoding()]; }

bool is_separable(const ProjPoint &p) {
    size_t n = p.n_qubits();
    size_t dim = p.dimension();
    for (size_t axis = 0; axis < n; axis++) {
        // Rows indexed by the axis bit, columns by the remaining bits.
        std::vector<uint64_t> rows(2, 0);
        for (size_t idx = 0; idx < dim; idx++) {
            if (!p.at_key(uint32_t(idx))) {
                continue;
            }
            size_t low = idx & ((size_t{1} << axis) - 1);
            size_t col = low | ((idx >> (axis + 1)) << axis);
            rows[idx >> axis & 1] |= uint64_t{1} << col;
        }
        if (rank_packed(rows) > 1) {
            return false;
        }
    }
    return true;
}

int exclusive_rank(const ChartMatrix &a) {
    size_t n = a.size();
    for (size_t k = 0;; k++) {
        size_t s = k + 1;
        if (2 * s > n) {
            return int(k);
        }
        bool all_zero = true;
        for (uint32_t rk : subsets_by_key(n, s)) {
            uint32_t rest = ((uint32_t{1} << n) - 1) & ~rk;
            std::vector<size_t> rows = SubsetIndex::from_key(n, rk).members();
            for (uint32_t ck : subsets_by_key(n, s)) {
                if ((ck & ~rest) != 0) {
                    continue;
                }
                std::vector<size_t> cols = SubsetIndex::from_key(n, ck).members();
                if (minor(a.entries, rows, cols)) {
                    all_zero = false;
                    break;
                }
            }
            if (!all_zero) {
                break;
            }
        }
        if (all_zero) {
            return int(k);
        }
    }
}

ProjPoint transport_to_chart(const ProjPoint &p) {
    if (p.at_key(0)) {
        return p;
    }
    std::vector<GroupElem> gens = bfs_generators(p.n_qubits());
    std::unordered_set<uint64_t> seen = {p.encoding()};
    std::deque<uint64_t> queue = {p.encoding()};
    while (!queue.empty()) {
        uint64_t e = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            uint64_t q = g.act_packed(e);
            if (q & 1) {
                return ProjPoint(p.n_qubits(), q);
            }
            if (seen.insert(q).second) {
                queue.push_back(q);
            }
        }
    }
    throw NotInImageError("orbit of " + p.to_string() + " never meets the chart");
}

int e_rank(const ProjPoint &p) {
    if (!image_table(p.n_qubits()).contains(p)) {
        throw NotInImageError("E-rank is only defined on the image; " + p.to_string() + " is not in it");
    }
    return exclusive_rank(chart_matrix(transport_to_chart(p)));
}

std::vector<TableRow> emit_tables(size_t n_qubits) {
    const OrbitPartition &data = orbit_data(n_qubits);
    std::map<size_t, ProjPoint> published;
    for (const auto &row : known_image_orbits(n_qubits)) {
        ProjPoint rep = row.representative(n_qubits);
        published.emplace(data.orbit_id(rep), rep);
    }
    std::vector<TableRow> out;
    for (const auto &rec : data.records()) {
        if (!rec.in_image) {
            continue;
        }
        auto it = published.find(rec.orbit_id);
        std::optional<ProjPoint> paper_rep;
        if (it != published.end()) {
            paper_rep = it->second;
        }
        ProjPoint shown = paper_rep.value_or(rec.representative);
        Generator g = lift(shown);
        std::vector<std::string> basis;
        for (const auto &r : g.basis().row_list()) {
            basis.push_back(PauliPoint(n_qubits, r).label());
        }
        std::vector<std::string> points;
        for (const auto &pt : generator_points(g)) {
            points.push_back(pt.label());
        }
        out.push_back(TableRow{rec, paper_rep, shown, to_observable(shown).label(), std::move(basis),
                               std::move(points)});
    }
    return out;
}

}  // namespace lgrpauli
