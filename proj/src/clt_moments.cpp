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

#include "isac/clt_moments.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

GaussianMoments clt_moments_3d(int n_tx) {
    if (n_tx < 1) throw std::invalid_argument("clt_moments_3d: n_tx must be >= 1");
    const double n = static_cast<double>(n_tx);
    GaussianMoments m;
    m.mean = Eigen::Vector3d(0.0, 0.0, n);
    m.covariance = Eigen::Vector3d(0.5 * n, 0.5 * n, n).asDiagonal();
    return m;
}

GaussianMoments clt_moments_4d(int n_tx, double phase_alpha, double phase_beta) {
    if (n_tx < 1) throw std::invalid_argument("clt_moments_4d: n_tx must be >= 1");
    const double n = static_cast<double>(n_tx);
    const double c = 0.5 * n * std::cos(phase_alpha - phase_beta);
    const double s = 0.5 * n * std::sin(phase_alpha - phase_beta);
    GaussianMoments m;
    m.mean = Eigen::Vector4d(0.0, 0.0, n, 0.0);
    m.covariance.resize(4, 4);
    m.covariance << 0.5 * n, 0.0, 0.0, c,
                    0.0, 0.5 * n, 0.0, s,
                    0.0, 0.0, n, 0.0,
                    c, s, 0.0, 0.5 * n;
    return m;
}

SteeredAggregates draw_surrogate_aggregates(int n_tx, double phase_alpha,
                                            double phase_beta, RngStream& rng) {
    const double n = static_cast<double>(n_tx);
    const double proj_sd = std::sqrt(0.5 * n);
    SteeredAggregates agg;
    agg.proj_re = proj_sd * rng.normal();
    agg.proj_im = proj_sd * rng.normal();
    agg.energy = n + std::sqrt(n) * rng.normal();
    const double d = phase_alpha - phase_beta;
    agg.proj_rot = agg.proj_re * std::cos(d) + agg.proj_im * std::sin(d);
    return agg;
}

}  // namespace isac
