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

#include "isac/config.hpp"
#include "isac/csv.hpp"

namespace isac {

/// Ergodic rates versus tau: exact and Monte Carlo user rate, the two
/// user-rate upper bounds, eavesdropper rate (quadrature and Monte Carlo),
/// and the secrecy rate. One row per tau grid point.
CsvTable run_fig_a(const ExperimentConfig& config);

/// Ergodic CRBs versus tau: closed forms (exact, lower, eavesdropper),
/// the sampled approximate value with its standard error, and
/// truncated-angle Monte Carlo means for the exact and eavesdropper CRBs.
CsvTable run_fig_b(const ExperimentConfig& config);

/// CCDF of the CRB versus eps (first column 10 log10(eps/10)): closed-form
/// lower/exact/eavesdropper curves, integral upper/approx curves with
/// standard errors, and empirical curves from physical channel draws.
CsvTable run_fig_c(const ExperimentConfig& config);

/// Custom sweep: the tau variant merges the fig-a and fig-b columns; the
/// epsilon variant reproduces the fig-c table on the configured grid.
CsvTable run_sweep(const ExperimentConfig& config);

}  // namespace isac
