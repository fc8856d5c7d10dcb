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
#include <vector>

#include "lgrpauli/group.hpp"
#include "lgrpauli/projection.hpp"

namespace lgrpauli {

struct OrbitRecord {
    /// 1-based, in (size, representative encoding) order.
    size_t orbit_id;
    /// Published name of the orbit when one is known ("O4").
    std::optional<std::string> known_label;
    size_t size;
    /// The member with minimal encoding.
    ProjPoint representative;
    int t_rank;
    /// Only for orbits inside the image.
    std::optional<int> e_rank;
    std::optional<std::string> observable;
    bool in_image;
};

/// The G-orbits of PG(2^N - 1, 2), built once per N (2 <= N <= 4).
class OrbitPartition {
   public:
    explicit OrbitPartition(size_t n_qubits);

    size_t n_qubits() const { return n_qubits_; }
    const std::vector<OrbitRecord> &records() const { return records_; }
    /// orbit_id of the orbit containing `p`.
    size_t orbit_id(const ProjPoint &p) const;
    const OrbitRecord &record_of(const ProjPoint &p) const { return records_[orbit_id(p) - 1]; }
    /// Members of orbit `id`, ascending encoding.
    std::vector<ProjPoint> members(size_t id) const;

   private:
    size_t n_qubits_;
    std::vector<uint32_t> orbit_of_;  // by encoding, 0-based record index
    std::vector<OrbitRecord> records_;
};

const OrbitPartition &orbit_data(size_t n_qubits);

/// All orbits, sorted by (size, representative). 2 <= N <= 4.
std::vector<OrbitRecord> orbit_partition(size_t n_qubits);

/// The orbits meeting the image, each checked to lie inside it. Throws
/// MixedOrbitError otherwise.
std::vector<OrbitRecord> classify_image(size_t n_qubits);

/// Orbit of `p` by breadth-first closure under bfs_generators, ascending
/// encoding. Works for every N.
std::vector<ProjPoint> orbit_of(const ProjPoint &p);

/// Minimal number of separable tensors summing to `p` (N <= 4), read from a
/// table built by layered closure over the 3^N separable vectors.
int t_rank(const ProjPoint &p);

/// Rank one iff every flattening along a single axis has rank one.
bool is_separable(const ProjPoint &p);

/// Minimal k such that every (k+1) x (k+1) minor with disjoint row and
/// column sets vanishes.
int exclusive_rank(const ChartMatrix &a);

/// First point in breadth-first order of the orbit of `p` whose empty
/// coordinate is 1.
ProjPoint transport_to_chart(const ProjPoint &p);

/// exclusive_rank of the chart matrix of `p`, after transporting `p` along
/// its orbit onto the chart if needed. Throws NotInImageError.
int e_rank(const ProjPoint &p);

/// One row of a classification table.
struct TableRow {
    OrbitRecord record;
    /// The published representative, when the orbit has one.
    std::optional<ProjPoint> known_representative;
    /// Published representative if known, else the canonical one.
    ProjPoint shown_representative;
    std::string observable;
    /// Canonical basis of lift(shown_representative), as labels.
    std::vector<std::string> commuting_basis;
    /// Every nonidentity element of that generator.
    std::vector<std::string> commuting_set;
};

/// Rows for every image orbit, in orbit_id order. 2 <= N <= 4.
std::vector<TableRow> emit_tables(size_t n_qubits);

}  // namespace lgrpauli
