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

#include "isac/ergodic_crb.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "isac/clt_moments.hpp"
#include "isac/crb.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

double mode_factor(const SystemParams& p, AveragingMode mode) {
    if (mode == AveragingMode::verbatim) return 1.0;
    return kPi / (kPi - 2.0 * p.delta);
}

}  // namespace

double ergodic_crb_exact(const SystemParams& p, AveragingMode mode) {
    const double m = static_cast<double>(p.m_rx);
    const double denom = static_cast<double>(p.frame_len) * std::norm(p.c3) *
                         p.data_power() * p.n_tx * p.alpha_mag * p.alpha_mag *
                         kPi * kPi * kPi * m * (m * m - 1.0);
    if (!(denom > 0.0))
        throw InfiniteErgodicCrb("ergodic_crb_exact: no data-beam power on target");
    return mode_factor(p, mode) * 12.0 * p.sigma_r * p.sigma_r / denom *
           std::tan(kPi / 2.0 - p.delta);
}

double ergodic_crb_lower(const SystemParams& p, AveragingMode mode) {
    const double m = static_cast<double>(p.m_rx);
    const double n = static_cast<double>(p.n_tx);
    const double bracket =
        p.alpha_mag * p.alpha_mag * p.tau * (m * m - 1.0) +
        (n * n - 1.0) * (1.0 - p.tau) / (n - 2.0);
    const double denom = m * n * kPi * kPi * kPi * p.frame_len * p.power *
                         std::norm(p.c3) * bracket;
    if (!(denom > 0.0))
        throw InfiniteErgodicCrb("ergodic_crb_lower: zero information bracket");
    return mode_factor(p, mode) * 12.0 * p.sigma_r * p.sigma_r / denom *
           std::tan(kPi / 2.0 - p.delta);
}

double ergodic_crb_phi(const SystemParams& p, AveragingMode mode) {
    const double ne = static_cast<double>(p.n_eav);
    const double denom = ne * p.n_tx * kPi * kPi * kPi * p.frame_len * p.power *
                         std::norm(p.c4) * p.alpha_mag * p.alpha_mag * p.tau *
                         (ne * ne - 1.0);
    if (!(denom > 0.0))
        throw InfiniteErgodicCrb("ergodic_crb_phi: no data-beam power on target");
    return mode_factor(p, mode) * 12.0 * p.sigma_r * p.sigma_r / denom *
           std::tan(kPi / 2.0 - p.delta);
}

ErgodicEstimate ergodic_crb_approx(const SystemParams& p, std::size_t samples,
                                   RngStream& rng, AveragingMode mode) {
    if (samples < 10000)
        throw std::invalid_argument("ergodic_crb_approx: samples must be >= 1e4");
    const double lim = kPi / 2.0 - p.delta;
    double sum = 0.0, sum_sq = 0.0;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double theta = rng.uniform(-lim, lim);
        const SteeredAggregates agg =
            draw_surrogate_aggregates(p.n_tx, 0.0, 0.0, rng);
        const double v = crb_theta_approx_from_aggregates(
            p, theta, agg.proj_re, agg.proj_im, agg.energy);
        if (!std::isfinite(v)) continue;  // unidentifiable surrogate draw
        sum += v;
        sum_sq += v * v;
        ++kept;
    }
    ErgodicEstimate est;
    est.skipped_fraction =
        static_cast<double>(samples - kept) / static_cast<double>(samples);
    if (kept == 0) {
        est.value = std::numeric_limits<double>::infinity();
        return est;
    }
    const double n = static_cast<double>(kept);
    double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    double se = std::sqrt(var / n);
    if (mode == AveragingMode::verbatim) {
        // The truncated-domain mean rescaled to the (pi - 2 delta) ~ pi
        // convention of the closed forms.
        const double f = (kPi - 2.0 * p.delta) / kPi;
        mean *= f;
        se *= f;
    }
    est.value = mean;
    est.std_error = se;
    return est;
}

}  // namespace isac
