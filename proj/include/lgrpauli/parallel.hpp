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

#include <cstddef>
#include <functional>

namespace lgrpauli {

/// Number of worker threads used by the parallel loops below. Defaults to 1.
size_t worker_count();
void set_worker_count(size_t workers);

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(chunk_index, begin, end) for each. Chunk boundaries depend only on n
/// and the worker count; callers that merge per-chunk results in chunk order
/// get output independent of scheduling. Exceptions are rethrown on the
/// calling thread (first chunk wins).
void parallel_chunks(size_t n, const std::function<void(size_t, size_t, size_t)> &body);

/// Number of chunks parallel_chunks(n, ...) will use.
size_t chunk_count(size_t n);

}  // namespace lgrpauli
