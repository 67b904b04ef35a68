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

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "isac/clt_moments.hpp"
#include "isac/rng.hpp"

namespace isac {

struct ProbabilityEstimate {
    double probability = 0.0;
    double std_error = 0.0;
};

/// Draws from a multivariate normal given its moments. Handles singular
/// covariances by clamping negative eigenvalues of the spectral square
/// root at zero.
class GaussianSampler {
public:
    explicit GaussianSampler(const GaussianMoments& moments)
        : mean_(moments.mean) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(moments.covariance);
        if (eig.info() != Eigen::Success)
            throw std::invalid_argument("GaussianSampler: eigendecomposition failed");
        Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        transform_ = eig.eigenvectors() * roots.asDiagonal();
    }

    Eigen::VectorXd draw(RngStream& rng) const {
        Eigen::VectorXd z(mean_.size());
        for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
        return mean_ + transform_ * z;
    }

private:
    Eigen::VectorXd mean_;
    Eigen::MatrixXd transform_;
};

/// Monte Carlo probability of `indicator` under the multivariate normal.
/// Unbiased, with std_error = sqrt(p (1 - p) / samples); deterministic
/// given the stream state. Requires samples >= 1000.
template <class Indicator>
ProbabilityEstimate gaussian_domain_probability(const GaussianMoments& moments,
                                                Indicator&& indicator,
                                                std::size_t samples,
                                                RngStream& rng) {
    if (samples < 1000)
        throw std::invalid_argument(
            "gaussian_domain_probability: samples must be >= 1000");
    GaussianSampler sampler(moments);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (indicator(sampler.draw(rng))) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

}  // namespace isac
