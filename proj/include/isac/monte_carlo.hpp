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

#include <cstdint>
#include <utility>
#include <vector>

#include "isac/gaussian_domain.hpp"
#include "isac/system_model.hpp"

namespace isac {

/// Raw per-trial results. +infinity entries are retained (they count
/// toward every CCDF threshold); mean() is only meaningful when all
/// samples are finite, e.g. in truncated-angle mode.
struct EmpiricalDistribution {
    std::vector<double> samples;

    std::size_t count() const { return samples.size(); }
    ProbabilityEstimate ccdf(double threshold) const;
    double mean() const;
};

ProbabilityEstimate empirical_ccdf(const EmpiricalDistribution& dist,
                                   double threshold);

enum class CrbVariant { common, exact, eavesdropper };

/// Per-trial CRB draws through the physical channel model:
///   common        crb_theta_common on fresh (h, theta)
///   exact         crb_theta_exact on fresh theta
///   eavesdropper  crb_phi on fresh phi
/// With truncate_angles the angle is drawn uniform on
/// +-(pi/2 - delta), which keeps every sample finite and makes the mean
/// comparable to the exact-truncation ergodic values.
///
/// Trials are partitioned over fixed rng streams derived from `seed`; the
/// sample vector is bit-identical for any worker thread count.
EmpiricalDistribution mc_crb_samples(const SystemParams& params,
                                     std::size_t trials, CrbVariant variant,
                                     bool truncate_angles, std::uint64_t seed);

/// Per-trial user and comm-eavesdropper rates log2(1 + SINR) through the
/// physical channel model (fresh h, theta, h_e per trial; one beamformer
/// basis per trial shared by both receivers).
std::pair<EmpiricalDistribution, EmpiricalDistribution> mc_rate_samples(
    const SystemParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace isac
