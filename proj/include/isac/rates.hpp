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

#include "isac/beamforming.hpp"
#include "isac/system_model.hpp"

namespace isac {

/// User SINR for a given basis built from (h, a(theta)): the AN lies in the
/// nullspace of the user channel, so only the data beam contributes.
double sinr_user(const SystemParams& params, const Eigen::VectorXcd& h,
                 const BeamformerBasis& basis);

/// Convenience overload that builds the basis internally; propagates
/// DegenerateChannel.
double sinr_user(const SystemParams& params, const Eigen::VectorXcd& h,
                 double theta);

/// User SINR expressed through the aggregate statistics (proj_re, proj_im,
/// energy, proj_rot). Equals the inner-product form for physical draws;
/// for Gaussian-limit draws the square-root argument and the total signal
/// power are clamped at zero when the surrogate leaves the physical range.
double user_sinr_from_aggregates(const SystemParams& params,
                                 const SteeredAggregates& agg);

/// Comm-eavesdropper SINR: data-beam power over noise plus AN leakage
/// through the nullspace columns.
double sinr_eav(const SystemParams& params, const Eigen::VectorXcd& h_e,
                const BeamformerBasis& basis);

struct RateEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Ergodic user rate as the expectation of log2(1 + SINR) under the
/// Gaussian limit of the aggregate statistics (angle-independent).
RateEstimate ergodic_rate_user_exact(const SystemParams& params,
                                     std::size_t samples, RngStream& rng);

/// Cross-check mode: evaluates the tail-integral identity
/// integral_0^inf P(SINR > 2^t - 1) dt on a Simpson grid with fresh
/// Gaussian-limit draws per node.
RateEstimate ergodic_rate_user_tail_integral(const SystemParams& params,
                                             std::size_t samples_per_node,
                                             RngStream& rng);

/// Upper bound from ||h^H t1||^2 <= ||h||^2: quadrature of
/// log2(1 + snr x) against the Gamma(N, 1) density of ||h||^2.
double ergodic_rate_user_ub1(const SystemParams& params);

/// Second-order expansion of ub1 around E||h||^2 = N.
double ergodic_rate_user_ub1_taylor(const SystemParams& params);

/// Jensen bound log2(1 + E[SINR]) with
/// E[SINR] = snr (|alpha|^2 + |beta|^2 (N - 1)).
double ergodic_rate_user_ub2(const SystemParams& params);

/// Ergodic comm-eavesdropper rate by adaptive quadrature of the tail
/// integral; absolute tolerance 1e-8. Returns 0 when tau = 0.
double ergodic_rate_eav(const SystemParams& params);

/// Integrand of ergodic_rate_eav at rate t (equals 1 at t = 0).
double ergodic_rate_eav_integrand(const SystemParams& params, double t);

/// Monte Carlo of the eavesdropper rate under the distributions the
/// quadrature itself assumes (mean-2 exponential beam gain, Gamma(N-2,
/// scale 2) AN leakage). Self-consistency oracle for ergodic_rate_eav;
/// physical-channel draws use mc_rate_samples instead and follow a mean-1
/// convention.
RateEstimate ergodic_rate_eav_reference_mc(const SystemParams& params,
                                           std::size_t samples, RngStream& rng);

struct RateBreakdown {
    double user_rate = 0.0;
    double user_std_error = 0.0;
    double eav_rate = 0.0;
    double secrecy_rate = 0.0;  // max(0, user_rate - eav_rate)
    const char* user_method = "gaussian-limit-mc";
    const char* eav_method = "tail-quadrature";
};

/// Ergodic secrecy rate: user rate (Gaussian-limit sampling) minus
/// eavesdropper rate (quadrature), clamped at zero.
RateBreakdown secrecy_rate(const SystemParams& params, std::size_t samples,
                           RngStream& rng);

}  // namespace isac
