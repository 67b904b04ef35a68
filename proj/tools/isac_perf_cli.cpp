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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "isac/config.hpp"
#include "isac/csv.hpp"
#include "isac/experiments.hpp"
#include "isac/validation.hpp"

namespace {

struct CliOverrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> out;
    std::optional<std::string> mode;
    std::optional<std::string> sweep_var;
    double tolerance_scale = 1.0;
};

isac::ExperimentConfig resolve_config(const CliOverrides& cli) {
    isac::ExperimentConfig cfg;
    if (!cli.config_path.empty()) cfg = isac::load_config(cli.config_path);
    if (cli.seed) cfg.seed = *cli.seed;
    if (cli.trials) cfg.trials = *cli.trials;
    if (cli.out) cfg.out_path = *cli.out;
    if (cli.mode) cfg.mode = isac::mode_from_name(*cli.mode);
    if (cli.sweep_var) {
        if (*cli.sweep_var == "tau") cfg.sweep_var = isac::SweepVar::tau;
        else if (*cli.sweep_var == "epsilon") cfg.sweep_var = isac::SweepVar::epsilon;
        else throw isac::ConfigError("--var must be tau or epsilon");
    }
    cfg.validate();
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw isac::ConfigError("cannot open output '" + out_path + "'");
    out << text;
    if (!out) throw isac::ConfigError("write failed for '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Numerical performance analysis for a secure MIMO ISAC downlink:\n"
        "closed-form beamformer, angle-estimation CRBs and their CCDFs,\n"
        "ergodic CRBs, ergodic secrecy rates, and Monte Carlo cross-checks."};
    app.require_subcommand(1);

    CliOverrides cli;
    app.add_option("--config", cli.config_path, "Scenario config file (key = value lines)");
    app.add_option("--seed", cli.seed, "Master seed for all random streams");
    app.add_option("--trials", cli.trials, "Monte Carlo trials per table");
    app.add_option("--out", cli.out, "Output path (default: stdout)");
    app.add_option("--mode", cli.mode,
                   "Ergodic averaging mode: paper-verbatim | exact-truncation");

    auto* fig_a = app.add_subcommand("fig-a", "Ergodic rates versus tau (CSV)");
    auto* fig_b = app.add_subcommand("fig-b", "Ergodic CRBs versus tau (CSV)");
    auto* fig_c = app.add_subcommand("fig-c", "CCDF of the CRB versus eps (CSV)");
    auto* sweep = app.add_subcommand("sweep", "Custom sweep over tau or epsilon (CSV)");
    sweep->add_option("--var", cli.sweep_var, "Sweep variable: tau | epsilon");
    auto* validate =
        app.add_subcommand("validate", "Run the invariant/oracle suite and report");
    validate
        ->add_option("--tolerance-scale", cli.tolerance_scale,
                     "Scale factor applied to the upper-limit tolerances")
        ->capture_default_str();

    // Global options may appear after the subcommand name.
    for (auto* sub : {fig_a, fig_b, fig_c, sweep, validate}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const isac::ExperimentConfig cfg = resolve_config(cli);
        if (fig_a->parsed()) {
            emit(isac::run_fig_a(cfg).to_string(), cfg.out_path);
        } else if (fig_b->parsed()) {
            emit(isac::run_fig_b(cfg).to_string(), cfg.out_path);
        } else if (fig_c->parsed()) {
            emit(isac::run_fig_c(cfg).to_string(), cfg.out_path);
        } else if (sweep->parsed()) {
            emit(isac::run_sweep(cfg).to_string(), cfg.out_path);
        } else if (validate->parsed()) {
            const isac::ValidationReport report =
                isac::run_validation(cfg, cli.tolerance_scale);
            emit(isac::format_report(report, cfg), cfg.out_path);
            for (const auto& group : report.groups) {
                std::fprintf(stderr, "[%s] %.2fs\n", group.name.c_str(),
                             group.elapsed_seconds);
            }
            if (!report.passed()) return 1;
        }
    } catch (const isac::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
