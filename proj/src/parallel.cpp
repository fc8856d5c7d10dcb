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

#include "lgrpauli/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace lgrpauli {

namespace {
std::atomic<size_t> g_workers{1};
}

size_t worker_count() { return g_workers.load(); }

void set_worker_count(size_t workers) { g_workers.store(std::max<size_t>(workers, 1)); }

size_t chunk_count(size_t n) { return std::max<size_t>(1, std::min(n, worker_count())); }

void parallel_chunks(size_t n, const std::function<void(size_t, size_t, size_t)> &body) {
    size_t chunks = chunk_count(n);
    if (chunks == 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (size_t c = 0; c < chunks; c++) {
        size_t begin = n * c / chunks;
        size_t end = n * (c + 1) / chunks;
        threads.emplace_back([&, c, begin, end] {
            try {
                body(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace lgrpauli
