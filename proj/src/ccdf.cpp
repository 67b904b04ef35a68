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

#include "isac/ccdf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isac/clt_moments.hpp"
#include "isac/crb.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

/// (2/pi) asin(sqrt(6) sigma_r / sqrt(eps * scale)), clamped to 1. This is
/// P(cos^2(angle) < 6 sigma_r^2 / (eps * scale)) for a uniform angle, the
/// common shape of all closed-form CRB CCDFs here.
double arcsine_ccdf(double sigma_r, double epsilon, double scale) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("ccdf: epsilon must be positive");
    if (!(scale > 0.0)) return 1.0;  // infinite CRB for every draw
    const double arg = std::sqrt(6.0) * sigma_r / std::sqrt(epsilon * scale);
    if (arg >= 1.0) return 1.0;
    return 2.0 / kPi * std::asin(arg);
}

/// Measure of angles (uniform on (-pi/2, pi/2)) whose cos^2 falls below u:
/// the exact inner integral of the CCDF expressions once the aggregate
/// draw fixes the information bracket.
double angle_measure_below(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return 2.0 / kPi * std::asin(std::sqrt(u));
}

using BracketFn = double (*)(const SystemParams&, double, double, double);

/// P(CRB > eps) for the bracket-form substitutes. The angle integral is
/// closed-form per draw, so Monte Carlo runs only over the Gaussian-limit
/// aggregates; a non-positive bracket marks the draw unidentifiable and
/// contributes probability one.
CcdfCurve ccdf_integral_curve(const SystemParams& p,
                              const std::vector<double>& thresholds,
                              std::size_t samples, RngStream& rng,
                              BracketFn bracket_fn) {
    for (double eps : thresholds) {
        if (!(eps > 0.0))
            throw std::invalid_argument("ccdf: epsilon must be positive");
    }
    if (samples < 1000)
        throw std::invalid_argument("ccdf: samples must be >= 1000");

    const double flat = angle_flat_scale(p);
    const std::size_t n_eps = thresholds.size();
    std::vector<double> sum(n_eps, 0.0), sum_sq(n_eps, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        const SteeredAggregates agg =
            draw_surrogate_aggregates(p.n_tx, 0.0, 0.0, rng);
        const double bracket =
            bracket_fn(p, agg.proj_re, agg.proj_im, agg.energy);
        const bool identifiable = bracket > 0.0 && std::isfinite(bracket);
        for (std::size_t e = 0; e < n_eps; ++e) {
            const double m = identifiable
                                 ? angle_measure_below(
                                       flat / (thresholds[e] * bracket))
                                 : 1.0;
            sum[e] += m;
            sum_sq[e] += m * m;
        }
    }
    CcdfCurve curve;
    curve.thresholds = thresholds;
    curve.probabilities.resize(n_eps);
    curve.std_errors.resize(n_eps);
    const double n = static_cast<double>(samples);
    for (std::size_t e = 0; e < n_eps; ++e) {
        const double mean = sum[e] / n;
        const double var = std::max(0.0, sum_sq[e] / n - mean * mean);
        curve.probabilities[e] = mean;
        curve.std_errors[e] = std::sqrt(var / n);
    }
    return curve;
}

ProbabilityEstimate ccdf_integral(const SystemParams& p, double epsilon,
                                  std::size_t samples, RngStream& rng,
                                  BracketFn bracket_fn) {
    const CcdfCurve curve =
        ccdf_integral_curve(p, {epsilon}, samples, rng, bracket_fn);
    return {curve.probabilities[0], curve.std_errors[0]};
}

}  // namespace

double ccdf_crb_lower(const SystemParams& p, double epsilon) {
    const double m = static_cast<double>(p.m_rx);
    const double n = static_cast<double>(p.n_tx);
    const double bracket =
        p.alpha_mag * p.alpha_mag * p.tau * (m * m - 1.0) +
        (n * n - 1.0) * (1.0 - p.tau) / (n - 2.0);
    const double scale = m * n * kPi * kPi * p.frame_len * p.power *
                         std::norm(p.c3) * bracket;
    return arcsine_ccdf(p.sigma_r, epsilon, scale);
}

ProbabilityEstimate ccdf_crb_upper(const SystemParams& p, double epsilon,
                                   std::size_t samples, RngStream& rng) {
    return ccdf_integral(p, epsilon, samples, rng, &info_bracket_upper);
}

ProbabilityEstimate ccdf_crb_approx(const SystemParams& p, double epsilon,
                                    std::size_t samples, RngStream& rng) {
    return ccdf_integral(p, epsilon, samples, rng, &info_bracket_approx);
}

double ccdf_crb_exact(const SystemParams& p, double epsilon) {
    const double m = static_cast<double>(p.m_rx);
    const double scale = static_cast<double>(p.frame_len) * std::norm(p.c3) *
                         p.data_power() * p.n_tx * p.alpha_mag * p.alpha_mag *
                         kPi * kPi * m * (m * m - 1.0);
    return arcsine_ccdf(p.sigma_r, epsilon, scale);
}

double ccdf_crb_phi(const SystemParams& p, double epsilon) {
    const double ne = static_cast<double>(p.n_eav);
    const double scale = ne * p.n_tx * kPi * kPi * p.frame_len * p.power *
                         std::norm(p.c4) * p.alpha_mag * p.alpha_mag * p.tau *
                         (ne * ne - 1.0);
    return arcsine_ccdf(p.sigma_r, epsilon, scale);
}

CcdfCurve ccdf_crb_upper_curve(const SystemParams& p,
                               const std::vector<double>& thresholds,
                               std::size_t samples, RngStream& rng) {
    return ccdf_integral_curve(p, thresholds, samples, rng,
                               &info_bracket_upper);
}

CcdfCurve ccdf_crb_approx_curve(const SystemParams& p,
                                const std::vector<double>& thresholds,
                                std::size_t samples, RngStream& rng) {
    return ccdf_integral_curve(p, thresholds, samples, rng,
                               &info_bracket_approx);
}

}  // namespace isac
