// SPDX-License-Identifier: Apache-2.0
//
// isac-perf  Performance analysis toolkit for secure MIMO ISAC downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "isac/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

namespace isac {

void parallel_streams(std::size_t total, std::size_t n_streams,
                      std::uint64_t master_seed, std::string_view domain,
                      const std::function<void(std::size_t, std::size_t,
                                               std::size_t, RngStream&)>& body,
                      unsigned max_threads) {
    if (total == 0) return;
    n_streams = std::max<std::size_t>(1, std::min(n_streams, total));

    const std::size_t quot = total / n_streams;
    const std::size_t rem = total % n_streams;
    auto block_begin = [&](std::size_t s) {
        return s * quot + std::min(s, rem);
    };

    auto run_stream = [&](std::size_t s) {
        RngStream rng = RngStream::from(master_seed, domain, s);
        body(s, block_begin(s), block_begin(s + 1), rng);
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (max_threads == 0) max_threads = hw;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::min<unsigned>(max_threads, hw), n_streams));

    if (workers <= 1) {
        for (std::size_t s = 0; s < n_streams; ++s) run_stream(s);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t s = next.fetch_add(1, std::memory_order_relaxed);
                if (s >= n_streams) return;
                run_stream(s);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace isac
