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

#include "isac/experiments.hpp"

#include <cmath>

#include "isac/ccdf.hpp"
#include "isac/crb.hpp"
#include "isac/ergodic_crb.hpp"
#include "isac/monte_carlo.hpp"
#include "isac/rates.hpp"

namespace isac {

namespace {

struct RateRow {
    double user_exact, user_exact_err, user_mc, ub1, ub2, eav, eav_mc, secrecy;
};

RateRow rate_row(const ExperimentConfig& cfg, const SystemParams& p,
                 std::size_t tau_index) {
    RateRow row{};
    RngStream rng = RngStream::from(cfg.seed, "fig-rates-exact", tau_index);
    const RateEstimate user = ergodic_rate_user_exact(p, cfg.clt_samples, rng);
    row.user_exact = user.value;
    row.user_exact_err = user.std_error;
    const auto [user_mc, eav_mc] = mc_rate_samples(
        p, cfg.trials, cfg.seed ^ (0x9E3779B97F4A7C15ull * (tau_index + 1)));
    row.user_mc = user_mc.mean();
    row.eav_mc = eav_mc.mean();
    row.ub1 = ergodic_rate_user_ub1(p);
    row.ub2 = ergodic_rate_user_ub2(p);
    row.eav = ergodic_rate_eav(p);
    row.secrecy = std::max(0.0, row.user_exact - row.eav);
    return row;
}

struct ErgodicRow {
    double exact, lower, approx, approx_err, phi, exact_mc, phi_mc;
};

ErgodicRow ergodic_row(const ExperimentConfig& cfg, const SystemParams& p,
                       std::size_t tau_index) {
    ErgodicRow row{};
    row.exact = ergodic_crb_exact(p, cfg.mode);
    row.lower = ergodic_crb_lower(p, cfg.mode);
    row.phi = ergodic_crb_phi(p, cfg.mode);
    // One shared stream address across tau rows: common random numbers keep
    // the sampled curve smooth in tau.
    RngStream rng = RngStream::from(cfg.seed, "fig-ergodic-approx", 0);
    const ErgodicEstimate approx =
        ergodic_crb_approx(p, cfg.clt_samples, rng, cfg.mode);
    row.approx = approx.value;
    row.approx_err = approx.std_error;
    row.exact_mc = mc_crb_samples(p, cfg.trials, CrbVariant::exact, true,
                                  cfg.seed ^ (tau_index + 1))
                       .mean();
    row.phi_mc = mc_crb_samples(p, cfg.trials, CrbVariant::eavesdropper, true,
                                cfg.seed ^ (0x51ull * (tau_index + 1)))
                     .mean();
    return row;
}

}  // namespace

CsvTable run_fig_a(const ExperimentConfig& cfg) {
    cfg.validate();
    CsvTable table({"tau", "user_rate_exact", "user_rate_exact_err",
                    "user_rate_mc", "user_ub1", "user_ub2", "eav_rate",
                    "eav_rate_mc", "secrecy_rate"});
    for (std::size_t i = 0; i < cfg.tau_grid.size(); ++i) {
        SystemParams p = cfg.params;
        p.tau = cfg.tau_grid[i];
        const RateRow r = rate_row(cfg, p, i);
        table.add_row({p.tau, r.user_exact, r.user_exact_err, r.user_mc, r.ub1,
                       r.ub2, r.eav, r.eav_mc, r.secrecy});
    }
    return table;
}

CsvTable run_fig_b(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!(cfg.tau_grid.front() > 0.0))
        throw ConfigError("fig-b: tau grid must lie in (0, 1]");
    CsvTable table({"tau", "ecrb_exact", "ecrb_lower", "ecrb_approx",
                    "ecrb_approx_err", "ecrb_phi", "ecrb_exact_mc",
                    "ecrb_phi_mc"});
    for (std::size_t i = 0; i < cfg.tau_grid.size(); ++i) {
        SystemParams p = cfg.params;
        p.tau = cfg.tau_grid[i];
        const ErgodicRow r = ergodic_row(cfg, p, i);
        table.add_row({p.tau, r.exact, r.lower, r.approx, r.approx_err, r.phi,
                       r.exact_mc, r.phi_mc});
    }
    return table;
}

CsvTable run_fig_c(const ExperimentConfig& cfg) {
    cfg.validate();
    const SystemParams& p = cfg.params;

    RngStream upper_rng = RngStream::from(cfg.seed, "fig-c-upper");
    RngStream approx_rng = RngStream::from(cfg.seed, "fig-c-approx");
    const CcdfCurve upper =
        ccdf_crb_upper_curve(p, cfg.eps_grid, cfg.quad_samples, upper_rng);
    const CcdfCurve approx =
        ccdf_crb_approx_curve(p, cfg.eps_grid, cfg.quad_samples, approx_rng);

    const EmpiricalDistribution mc_common =
        mc_crb_samples(p, cfg.trials, CrbVariant::common, false, cfg.seed);
    const EmpiricalDistribution mc_exact =
        mc_crb_samples(p, cfg.trials, CrbVariant::exact, false, cfg.seed);

    CsvTable table({"eps_db", "ccdf_lower", "ccdf_upper", "ccdf_upper_err",
                    "ccdf_approx", "ccdf_approx_err", "ccdf_exact", "ccdf_phi",
                    "ccdf_mc_common", "ccdf_mc_common_err", "ccdf_mc_exact",
                    "ccdf_mc_exact_err"});
    for (std::size_t i = 0; i < cfg.eps_grid.size(); ++i) {
        const double eps = cfg.eps_grid[i];
        const double eps_db = 10.0 * std::log10(eps / 10.0);
        const ProbabilityEstimate emp_common = mc_common.ccdf(eps);
        const ProbabilityEstimate emp_exact = mc_exact.ccdf(eps);
        table.add_row({eps_db, ccdf_crb_lower(p, eps), upper.probabilities[i],
                       upper.std_errors[i], approx.probabilities[i],
                       approx.std_errors[i], ccdf_crb_exact(p, eps),
                       ccdf_crb_phi(p, eps), emp_common.probability,
                       emp_common.std_error, emp_exact.probability,
                       emp_exact.std_error});
    }
    return table;
}

CsvTable run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sweep_var == SweepVar::epsilon) return run_fig_c(cfg);

    if (!(cfg.tau_grid.front() > 0.0))
        throw ConfigError("sweep: tau grid must lie in (0, 1]");
    CsvTable table({"tau", "user_rate_exact", "user_rate_exact_err",
                    "user_rate_mc", "user_ub1", "user_ub2", "eav_rate",
                    "eav_rate_mc", "secrecy_rate", "ecrb_exact", "ecrb_lower",
                    "ecrb_approx", "ecrb_approx_err", "ecrb_phi",
                    "ecrb_exact_mc", "ecrb_phi_mc"});
    for (std::size_t i = 0; i < cfg.tau_grid.size(); ++i) {
        SystemParams p = cfg.params;
        p.tau = cfg.tau_grid[i];
        const RateRow a = rate_row(cfg, p, i);
        const ErgodicRow b = ergodic_row(cfg, p, i);
        table.add_row({p.tau, a.user_exact, a.user_exact_err, a.user_mc, a.ub1,
                       a.ub2, a.eav, a.eav_mc, a.secrecy, b.exact, b.lower,
                       b.approx, b.approx_err, b.phi, b.exact_mc, b.phi_mc});
    }
    return table;
}

}  // namespace isac
