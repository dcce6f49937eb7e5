// Copyright 2026 The qcut Authors
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

#ifndef QCUT_SRC_PARALLEL_H
#define QCUT_SRC_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcut::detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items must
/// write only to their own slot; the first exception is rethrown.
template <typename Fn>
void parallel_for(size_t count, unsigned jobs, Fn &&fn) {
    const size_t workers = std::min<size_t>(std::max(1u, jobs), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&] {
        for (size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> threads;
    for (size_t w = 1; w < workers; w++) {
        threads.emplace_back(run);
    }
    run();
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace qcut::detail

#endif
