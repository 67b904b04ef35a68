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

#include "isac/rng.hpp"
#include "isac/system_model.hpp"

namespace isac {

/// Mean and covariance of the Gaussian limit of the aggregate channel
/// statistics. 3-D order: (proj_re, proj_im, energy); 4-D adds proj_rot.
struct GaussianMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
};

/// Limit moments of (proj_re, proj_im, energy) for n_tx i.i.d. unit-variance
/// channel entries: mean [0, 0, N], covariance diag(N/2, N/2, N). The
/// moments do not depend on the steering angle.
GaussianMoments clt_moments_3d(int n_tx);

/// Limit moments of (proj_re, proj_im, energy, proj_rot). proj_rot couples
/// to the projections through the phase offset of the beam weights:
/// cov(proj_re, proj_rot) = (N/2) cos(phase_alpha - phase_beta),
/// cov(proj_im, proj_rot) = (N/2) sin(phase_alpha - phase_beta). The
/// covariance is singular because proj_rot is a rotation of the first two
/// coordinates.
GaussianMoments clt_moments_4d(int n_tx, double phase_alpha, double phase_beta);

/// Draws one sample of the Gaussian-limit aggregates. The 4-D law is
/// degenerate, so proj_rot is formed exactly as the rotation of the two
/// projection coordinates instead of through a matrix square root.
SteeredAggregates draw_surrogate_aggregates(int n_tx, double phase_alpha,
                                            double phase_beta, RngStream& rng);

}  // namespace isac
