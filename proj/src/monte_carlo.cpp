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

#include "isac/monte_carlo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isac/beamforming.hpp"
#include "isac/crb.hpp"
#include "isac/parallel.hpp"
#include "isac/rates.hpp"

namespace isac {

ProbabilityEstimate EmpiricalDistribution::ccdf(double threshold) const {
    if (samples.empty())
        throw std::invalid_argument("EmpiricalDistribution: no samples");
    std::size_t hits = 0;
    for (double s : samples) {
        if (s > threshold) ++hits;
    }
    const double n = static_cast<double>(samples.size());
    const double p = static_cast<double>(hits) / n;
    return {p, std::sqrt(p * (1.0 - p) / n)};
}

double EmpiricalDistribution::mean() const {
    if (samples.empty())
        throw std::invalid_argument("EmpiricalDistribution: no samples");
    double sum = 0.0;
    for (double s : samples) sum += s;
    return sum / static_cast<double>(samples.size());
}

ProbabilityEstimate empirical_ccdf(const EmpiricalDistribution& dist,
                                   double threshold) {
    return dist.ccdf(threshold);
}

EmpiricalDistribution mc_crb_samples(const SystemParams& params,
                                     std::size_t trials, CrbVariant variant,
                                     bool truncate_angles, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("mc_crb_samples: trials must be >= 1");
    EmpiricalDistribution dist;
    dist.samples.resize(trials);
    const double lim =
        std::numbers::pi / 2.0 - (truncate_angles ? params.delta : 0.0);

    const char* domain = variant == CrbVariant::common         ? "mc-crb-common"
                         : variant == CrbVariant::exact        ? "mc-crb-exact"
                                                               : "mc-crb-eav";
    parallel_streams(
        trials, kDefaultStreams, seed, domain,
        [&](std::size_t, std::size_t begin, std::size_t end, RngStream& rng) {
            Eigen::VectorXcd h(params.n_tx);
            for (std::size_t i = begin; i < end; ++i) {
                const double angle = rng.uniform(-lim, lim);
                switch (variant) {
                    case CrbVariant::common:
                        for (int k = 0; k < params.n_tx; ++k)
                            h[k] = rng.complex_normal();
                        dist.samples[i] = crb_theta_common(params, h, angle);
                        break;
                    case CrbVariant::exact:
                        dist.samples[i] = crb_theta_exact(params, angle);
                        break;
                    case CrbVariant::eavesdropper:
                        dist.samples[i] = crb_phi(params, angle);
                        break;
                }
            }
        });
    return dist;
}

std::pair<EmpiricalDistribution, EmpiricalDistribution> mc_rate_samples(
    const SystemParams& params, std::size_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("mc_rate_samples: trials must be >= 1");
    constexpr double kLog2e = 1.4426950408889634074;
    EmpiricalDistribution user, eav;
    user.samples.resize(trials);
    eav.samples.resize(trials);

    parallel_streams(
        trials, kDefaultStreams, seed, "mc-rates",
        [&](std::size_t, std::size_t begin, std::size_t end, RngStream& rng) {
            for (std::size_t i = begin; i < end; ++i) {
                const ChannelRealization draw = sample_realization(params, rng);
                if (!(params.tau > 0.0)) {
                    user.samples[i] = 0.0;
                    eav.samples[i] = 0.0;
                    continue;
                }
                const BeamformerBasis basis =
                    build_basis(steering_vector(draw.theta, params.n_tx), draw.h,
                                params.alpha(), params.beta());
                user.samples[i] =
                    std::log1p(sinr_user(params, draw.h, basis)) * kLog2e;
                eav.samples[i] =
                    std::log1p(sinr_eav(params, draw.h_e, basis)) * kLog2e;
            }
        });
    return {std::move(user), std::move(eav)};
}

}  // namespace isac
