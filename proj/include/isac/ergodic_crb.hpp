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
#include <stdexcept>

#include "isac/rng.hpp"
#include "isac/system_model.hpp"

namespace isac {

/// Ergodic CRBs average sec^2(angle) over the angle domain truncated to
/// +-(pi/2 - delta); without truncation the average diverges. The two modes
/// differ in the normalizing measure of the truncated domain:
///   verbatim          divides by pi, i.e. treats (pi - 2 delta) ~ pi. This
///                     reproduces the printed closed-form constants.
///   exact_truncation  divides by (pi - 2 delta), the true conditional
///                     mean over the truncated angle. Monte Carlo means of
///                     truncated draws estimate this mode.
/// The two differ by the factor pi / (pi - 2 delta), about 6.8% at
/// delta = 0.1.
enum class AveragingMode { verbatim, exact_truncation };

/// Thrown when an ergodic CRB is infinite for the requested parameters
/// (no data-beam power reaches the target: tau = 0 or |alpha| = 0).
struct InfiniteErgodicCrb : std::domain_error {
    using std::domain_error::domain_error;
};

struct ErgodicEstimate {
    double value = 0.0;
    double std_error = 0.0;
    /// Fraction of surrogate draws discarded as unidentifiable (the
    /// Gaussian limit occasionally produces aggregates with a non-positive
    /// information denominator; physical draws never do).
    double skipped_fraction = 0.0;
};

/// Ergodic angle CRB at the BS for the collapsed echo model.
double ergodic_crb_exact(const SystemParams& params, AveragingMode mode);

/// Closed-form lower bound of the ergodic angle CRB at the BS.
double ergodic_crb_lower(const SystemParams& params, AveragingMode mode);

/// Ergodic angle CRB at the sensing eavesdropper.
double ergodic_crb_phi(const SystemParams& params, AveragingMode mode);

/// Mean of the approximate CRB substitute over truncated angles and
/// Gaussian-limit aggregates. Draws whose denominator is non-positive are
/// excluded from the mean and counted in skipped_fraction.
ErgodicEstimate ergodic_crb_approx(const SystemParams& params,
                                   std::size_t samples, RngStream& rng,
                                   AveragingMode mode);

}  // namespace isac
