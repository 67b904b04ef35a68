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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace isac {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic random stream addressed by (master seed, domain tag, index).
///
/// Distinct addresses give independent streams, and the draw sequence of a
/// stream never depends on scheduling or thread count. All primitive draws
/// are fully specified here (no implementation-defined std distributions),
/// so outputs are reproducible across standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed_value) : gen_(seed_value) {}

    static RngStream from(std::uint64_t master_seed, std::string_view domain,
                          std::uint64_t index = 0) {
        std::uint64_t s = master_seed;
        (void)splitmix64(s);
        s ^= fnv1a64(domain);
        (void)splitmix64(s);
        s ^= index * 0xD1B54A32D192ED03ull;
        return RngStream(splitmix64(s));
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; the spare deviate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex normal with unit total variance,
    /// i.e. real and imaginary parts each have variance 1/2.
    std::complex<double> complex_normal() {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const double re = normal();
        const double im = normal();
        return {re * inv_sqrt2, im * inv_sqrt2};
    }

    double exponential(double mean) { return -mean * std::log(1.0 - uniform()); }

    /// Gamma with integer shape as a sum of exponentials.
    double gamma_int_shape(int shape, double scale) {
        double acc = 0.0;
        for (int i = 0; i < shape; ++i) acc += exponential(scale);
        return acc;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace isac
