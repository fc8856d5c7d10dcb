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

#include "lgrpauli/reference_data.hpp"

namespace lgrpauli {

ProjPoint KnownOrbitRow::representative(size_t n_qubits) const {
    BinVec bits(size_t{1} << n_qubits);
    for (size_t pos : support) {
        bits.set(pos, true);
    }
    return ProjPoint::from_display_bits(n_qubits, bits);
}

const std::vector<KnownOrbitRow> &known_image_orbits(size_t n_qubits) {
    static const std::vector<KnownOrbitRow> kTwo = {
        {"O1", 9, {3}, "XI", 1, 0, {"XI", "IX"}},
        {"O2", 6, {1, 3}, "YI", 2, 1, {"ZX", "XZ"}},
    };
    static const std::vector<KnownOrbitRow> kThree = {
        {"O1", 27, {5}, "XIII", 1, 0, {"XII", "IXI", "IIX"}},
        {"O2", 54, {4, 7}, "IIXZ", 2, 1, {"ZZI", "XXI", "IIX"}},
        {"O4", 54, {4, 6, 7}, "IXXZ", 3, 1, {"XIX", "IXX", "ZZZ"}},
    };
    static const std::vector<KnownOrbitRow> kFour = {
        {"O2", 81, {9}, "XIIIIIII", 1, 0, {"XIII", "IXII", "IIXI", "IIIX"}},
        {"O3", 324, {10, 11}, "IXXIIIII", 2, 1, {"XIII", "IXII", "IIZZ", "IIYY"}},
        {"O6", 648, {10, 11, 13}, "IXXIXIII", 3, 1, {"XIII", "IZZZ", "IYYZ", "IYZY"}},
        {"O14", 162, {8, 10, 11, 13}, "IXXIXIIZ", 4, 1, {"ZYYY", "YZYY", "YYZY", "YYYZ"}},
        {"O17", 108, {6, 7, 14, 15}, "IIIIIYYI", 4, 2, {"XXII", "ZZII", "IIZZ", "IIYY"}},
        {"O18", 972, {6, 7, 9, 14, 15}, "XIIIIYYI", 4, 2, {"XIZZ", "IXZZ", "ZZXI", "ZZIX"}},
    };
    static const std::vector<KnownOrbitRow> kNone;
    switch (n_qubits) {
        case 2:
            return kTwo;
        case 3:
            return kThree;
        case 4:
            return kFour;
        default:
            return kNone;
    }
}

const std::vector<KnownOrbitSize> &known_other_orbits(size_t n_qubits) {
    static const std::vector<KnownOrbitSize> kThree = {{"O3", 108}, {"O5", 12}};
    static const std::vector<KnownOrbitSize> kNone;
    return n_qubits == 3 ? kThree : kNone;
}

}  // namespace lgrpauli
