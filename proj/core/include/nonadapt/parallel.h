// Copyright 2026 The nonadapt Authors
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

#ifndef NONADAPT_PARALLEL_H
#define NONADAPT_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nonadapt {

/// Worker count: NONADAPT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
size_t worker_count();

/// Calls fn(i) for every i in [0, count). Work is split in contiguous blocks;
/// results must be written to per-index slots so the outcome never depends on
/// scheduling. The first exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_for(size_t count, Fn &&fn) {
    size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> stop{false};
    std::vector<std::thread> threads;
    size_t block = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; w++) {
        size_t begin = w * block;
        size_t end = std::min(count, begin + block);
        threads.emplace_back([&, begin, end]() {
            try {
                for (size_t i = begin; i < end && !stop.load(std::memory_order_relaxed); i++) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                stop = true;
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace nonadapt

#endif
