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

#include "isac/rng.hpp"
#include "isac/system_model.hpp"

namespace isac::reference {

// Independent evaluation routes for the angle CRB, used to cross-validate
// the closed forms. Each goes through full matrix algebra on an explicit
// transmit block instead of the elementwise closed-form sums.

/// Trace-form CRB from the sample covariance:
/// sigma_r^2 T_aa / (2 |c3|^2 L (T_aa T_dd - |T_da|^2)) with
/// T_aa = tr(A^H A R_x), T_dd = tr(A'^H A' R_x), T_da = tr(A'^H A R_x)
/// and A = b(theta) a(theta)^H.
double crb_theta_trace_form(const SystemParams& params,
                            const Eigen::VectorXcd& h, double theta);

/// Numeric-FIM CRB: builds an explicit waveform block, forms the mean
/// derivatives of the vectorized echo with the block held fixed, and runs
/// the generic complex-Gaussian FIM + Schur complement.
double crb_theta_numeric_fim(const SystemParams& params,
                             const Eigen::VectorXcd& h, double theta,
                             RngStream& rng);

/// Numeric-FIM CRB for the collapsed echo model, where the echo mean is
/// the data stream scaled onto the receive steering vector.
double crb_theta_collapsed_numeric(const SystemParams& params,
                                   const Eigen::VectorXcd& h, double theta,
                                   RngStream& rng);

}  // namespace isac::reference
