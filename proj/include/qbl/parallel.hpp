// Copyright 2026 The qudit-bound-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qbl {

/// Worker count used when the caller passes 0.
inline unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1U : hw;
}

/// Runs body(block) for every block in [0, n_blocks) on up to `threads`
/// workers. Blocks are claimed in a fixed round-robin pattern, so callers that
/// write results per block and merge them in block order get output that does
/// not depend on the worker count.
inline void parallel_for_blocks(std::size_t n_blocks, unsigned threads,
                                const std::function<void(std::size_t)> &body) {
    if (threads == 0) {
        threads = default_threads();
    }
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, n_blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            body(b);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t b = w; b < n_blocks; b += workers) {
                    body(b);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace qbl
