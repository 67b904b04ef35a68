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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isac/ergodic_crb.hpp"
#include "isac/system_model.hpp"

namespace isac {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SweepVar { tau, epsilon };

/// Scenario plus experiment knobs. Defaults reproduce the reference
/// scenario tables out of the box.
struct ExperimentConfig {
    SystemParams params;

    std::uint64_t seed = 42;
    std::size_t trials = 10000;         // per-table empirical sample count
    std::size_t mean_trials = 1000000;  // oracle comparisons of means/rates
    std::size_t clt_samples = 200000;   // Gaussian-limit expectation draws
    std::size_t quad_samples = 200000;  // draws for the integral CCDF curves
    AveragingMode mode = AveragingMode::verbatim;

    std::vector<double> tau_grid;  // default 0.05 .. 1.00, step 0.05
    std::vector<double> eps_grid;  // default 40 log-spaced in [0.5, 5000]

    SweepVar sweep_var = SweepVar::tau;
    std::string out_path;  // empty = stdout

    ExperimentConfig();

    /// Throws ConfigError on invalid grids or counts.
    void validate() const;
};

/// Parses the flat key = value format (one pair per line, '#' comments).
/// Unknown keys raise ConfigError. Complex gains are entered as magnitude
/// (c1..c4) with optional phases (c1_phase..c4_phase, default 0).
ExperimentConfig parse_config_text(std::string_view text);

/// Loads and parses a config file; ConfigError if unreadable.
ExperimentConfig load_config(const std::string& path);

/// mode string for reports/CLI: "paper-verbatim" or "exact-truncation".
std::string_view mode_name(AveragingMode mode);
AveragingMode mode_from_name(std::string_view name);  // ConfigError if unknown

}  // namespace isac
