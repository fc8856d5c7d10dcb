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

#include <stdexcept>
#include <string>

namespace lgrpauli {

/// Malformed textual input (labels, bit strings, hex).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two supplied operators anticommute.
struct NonCommutingError : std::invalid_argument {
    NonCommutingError(std::string first, std::string second)
        : std::invalid_argument("operators " + first + " and " + second + " do not commute"),
          first_label(std::move(first)),
          second_label(std::move(second)) {}
    std::string first_label;
    std::string second_label;
};

/// A commuting set whose span is smaller than a generator.
struct NotMaximalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point or vector that does not come from a Lagrangian subspace.
struct NotInImageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Qubit count or size outside a supported range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An orbit that straddles the image; would contradict group invariance.
struct MixedOrbitError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lgrpauli
