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

#include <string>
#include <vector>

#include "lgrpauli/projection.hpp"

namespace lgrpauli {

/// One published classification row for the image orbits of N = 2, 3, 4.
struct KnownOrbitRow {
    std::string label;  // "O2"
    size_t size;
    /// 1-based display positions of the representative's nonzero
    /// coordinates.
    std::vector<size_t> support;
    std::string observable;
    int t_rank;
    int e_rank;
    /// Generators of a maximal commuting set in the class.
    std::vector<std::string> commuting_set;

    ProjPoint representative(size_t n_qubits) const;
};

/// The published rows for image orbits. Empty outside 2..4.
const std::vector<KnownOrbitRow> &known_image_orbits(size_t n_qubits);

/// Labels of orbits outside the image that are pinned by size alone
/// (N = 3: the 108- and 12-point orbits).
struct KnownOrbitSize {
    std::string label;
    size_t size;
};
const std::vector<KnownOrbitSize> &known_other_orbits(size_t n_qubits);

}  // namespace lgrpauli
