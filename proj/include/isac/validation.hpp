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
#include <string>
#include <vector>

#include "isac/config.hpp"

namespace isac {

/// One named invariant/oracle comparison. `at_most` checks pass when
/// measured <= limit; the others pass when measured >= limit (margins).
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double limit = 0.0;
    bool at_most = true;
    bool pass = false;
};

struct ValidationGroup {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;  // reported separately, never in the report text

    bool passed() const;
};

struct ValidationReport {
    std::vector<ValidationGroup> groups;

    bool passed() const;
    std::size_t check_count() const;
    std::size_t failure_count() const;
};

/// Runs the full invariant and oracle suite on the configured scenario:
/// structural beamformer invariants, the CRB oracle chain, the CCDF
/// bracket, ergodic-CRB comparisons and orderings, rate comparisons and
/// bounds, and byte-determinism of the output tables. All tolerances are
/// fixed here; `tolerance_scale` rescales the at_most limits (a scale of 0
/// forces failures, used to exercise the failure path).
ValidationReport run_validation(const ExperimentConfig& config,
                                double tolerance_scale = 1.0);

/// Deterministic plain-text report: scenario echo, one line per check with
/// measured value and limit, and an overall verdict. Byte-identical for
/// identical configs.
std::string format_report(const ValidationReport& report,
                          const ExperimentConfig& config);

}  // namespace isac
