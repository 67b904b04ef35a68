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
#include <array>

#include "isac/system_model.hpp"

namespace isac {

/// Fisher information for [angle, Re(gain), Im(gain)], partitioned into the
/// angle block, the angle/gain cross block, and the 2x2 gain block.
struct FimBlocks {
    double f_theta_theta = 0.0;
    Eigen::RowVector2d f_theta_alpha = Eigen::RowVector2d::Zero();
    Eigen::Matrix2d f_alpha_alpha = Eigen::Matrix2d::Zero();
};

enum class CrbFailure {
    none,
    singular_nuisance_block,   // gain block not invertible
    nonpositive_information,   // Schur complement at or below the floor
};

/// Extended-real CRB value; `value` is +infinity whenever `failure` is set.
struct CrbResult {
    double value = 0.0;
    CrbFailure failure = CrbFailure::none;
};

/// FIM of a complex-Gaussian observation whose covariance does not depend
/// on the parameters: F_ij = (2 / noise_var) Re< d_i, d_j > where d_i is
/// the derivative of the mean with respect to parameter i. Parameter order:
/// [angle, Re(gain), Im(gain)].
FimBlocks fim_complex_gaussian(const std::array<Eigen::VectorXcd, 3>& mean_derivatives,
                               double noise_var);

/// Schur-complement CRB of the angle: [F_tt - F_ta F_aa^-1 F_at]^-1.
/// Schur complements at or below 1e-14 * F_tt are reported as +infinity,
/// distinguishing genuine unidentifiability from round-off.
CrbResult crb_from_blocks(const FimBlocks& blocks);

/// Angle CRB at the BS with the transmit block held fixed during
/// differentiation, evaluated in closed form from the channel draw.
/// Returns +infinity when the information denominator is <= 0 (only at
/// angle = +-pi/2 in exact arithmetic).
double crb_theta_common(const SystemParams& params, const Eigen::VectorXcd& h,
                        double theta);

/// Angle CRB at the BS for the collapsed echo model where only the data
/// beam reaches the target (the AN lies in the steering nullspace and
/// vanishes from the echo). +infinity when tau = 0, |alpha| = 0 or
/// cos(theta) = 0.
double crb_theta_exact(const SystemParams& params, double theta);

/// Angle CRB at the sensing eavesdropper. Same structure as
/// crb_theta_exact with the eavesdropper array and gain.
double crb_phi(const SystemParams& params, double phi);

/// Closed-form lower substitute for crb_theta_common: the channel
/// fluctuation term is dropped from the denominator, which only enlarges
/// it. Depends on the angle alone.
double crb_theta_lower_bound(const SystemParams& params, double theta);

/// Upper substitute via the Cauchy-Schwarz replacement of the fluctuation
/// term, expressed through the aggregate statistics (proj_re, proj_im,
/// energy). Non-positive denominators map to +infinity.
double crb_theta_upper_from_aggregates(const SystemParams& params, double theta,
                                       double proj_re, double proj_im,
                                       double energy);

/// Approximate substitute: the fluctuation term is replaced by its mean.
/// Same +infinity policy as the upper substitute.
double crb_theta_approx_from_aggregates(const SystemParams& params, double theta,
                                        double proj_re, double proj_im,
                                        double energy);

/// Angle-independent information brackets of the two substitutes: the CRB
/// value is angle_flat_scale / (cos^2(angle) * bracket). Aggregates with
/// non-positive residual energy (energy - proj^2 / N <= 0, impossible for
/// physical channels) yield NaN; a non-positive or non-finite bracket
/// denotes an unidentifiable draw whose CRB is +infinity.
double info_bracket_upper(const SystemParams& params, double proj_re,
                          double proj_im, double energy);
double info_bracket_approx(const SystemParams& params, double proj_re,
                           double proj_im, double energy);

/// 6 sigma_r^2 / (L |c3|^2 pi^2 M N), the shared numerator of the
/// substitutes with the cos^2 factor stripped.
double angle_flat_scale(const SystemParams& params);

}  // namespace isac
