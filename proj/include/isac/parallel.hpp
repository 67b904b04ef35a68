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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

#include "isac/rng.hpp"

namespace isac {

/// Runs `body(stream_index, begin, end, rng)` over a fixed partition of
/// [0, total) into `n_streams` contiguous blocks. The partition and every
/// stream's draw sequence depend only on (total, n_streams, master_seed,
/// domain), never on the number of worker threads, so results that are
/// written per index or merged in stream order are bit-reproducible.
void parallel_streams(std::size_t total, std::size_t n_streams,
                      std::uint64_t master_seed, std::string_view domain,
                      const std::function<void(std::size_t, std::size_t,
                                               std::size_t, RngStream&)>& body,
                      unsigned max_threads = 0);

/// Default stream count for Monte Carlo loops.
inline constexpr std::size_t kDefaultStreams = 64;

}  // namespace isac
