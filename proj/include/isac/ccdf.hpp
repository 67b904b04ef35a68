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
#include <vector>

#include "isac/gaussian_domain.hpp"
#include "isac/system_model.hpp"

namespace isac {

/// Tabulated CCDF: P(CRB > threshold) per threshold, with the Monte Carlo
/// standard error (zero for closed forms).
struct CcdfCurve {
    std::vector<double> thresholds;
    std::vector<double> probabilities;
    std::vector<double> std_errors;
};

/// Closed-form lower bound on P(CRB(theta) > eps) at the BS, obtained from
/// the lower CRB substitute and the distribution of cos^2 of a uniform
/// angle. Clamped to 1 when the arcsine argument reaches 1.
double ccdf_crb_lower(const SystemParams& params, double epsilon);

/// Upper bound on P(CRB(theta) > eps): Monte Carlo over the Gaussian-limit
/// aggregates of the Cauchy-Schwarz CRB substitute. The angle integral is
/// evaluated in closed form per draw (the substitute separates into
/// bracket / cos^2), which removes quadrature bias and most of the
/// variance of a nested angle/aggregate sampler.
ProbabilityEstimate ccdf_crb_upper(const SystemParams& params, double epsilon,
                                   std::size_t samples, RngStream& rng);

/// Approximation of P(CRB(theta) > eps): same machinery with the
/// mean-replaced CRB substitute.
ProbabilityEstimate ccdf_crb_approx(const SystemParams& params, double epsilon,
                                    std::size_t samples, RngStream& rng);

/// Closed-form CCDF of the collapsed-echo-model CRB at the BS.
double ccdf_crb_exact(const SystemParams& params, double epsilon);

/// Closed-form CCDF of the angle CRB at the sensing eavesdropper.
double ccdf_crb_phi(const SystemParams& params, double epsilon);

/// Whole-grid versions of the two integral CCDFs. Aggregate draws are
/// shared across thresholds, which keeps each curve monotone by
/// construction and costs one pass over the samples.
CcdfCurve ccdf_crb_upper_curve(const SystemParams& params,
                               const std::vector<double>& thresholds,
                               std::size_t samples, RngStream& rng);
CcdfCurve ccdf_crb_approx_curve(const SystemParams& params,
                                const std::vector<double>& thresholds,
                                std::size_t samples, RngStream& rng);

}  // namespace isac
