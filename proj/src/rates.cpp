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

#include "isac/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "isac/clt_moments.hpp"
#include "isac/quadrature.hpp"

namespace isac {

namespace {

constexpr double kLog2e = 1.4426950408889634074;  // 1 / ln 2

double log2_1p(double x) { return std::log1p(x) * kLog2e; }

double user_snr(const SystemParams& p) {
    return p.data_power() * std::norm(p.c1) / (p.sigma_u * p.sigma_u);
}

}  // namespace

double sinr_user(const SystemParams& p, const Eigen::VectorXcd& h,
                 const BeamformerBasis& basis) {
    return user_snr(p) * std::norm(basis.t1.dot(h));
}

double sinr_user(const SystemParams& p, const Eigen::VectorXcd& h,
                 double theta) {
    const BeamformerBasis basis =
        build_basis(steering_vector(theta, p.n_tx), h, p.alpha(), p.beta());
    return sinr_user(p, h, basis);
}

double user_sinr_from_aggregates(const SystemParams& p,
                                 const SteeredAggregates& agg) {
    const double n = static_cast<double>(p.n_tx);
    const double a2 = p.alpha_mag * p.alpha_mag;
    const double b2 = 1.0 - a2;
    const double proj_sq = agg.proj_re * agg.proj_re + agg.proj_im * agg.proj_im;
    const double residual = std::max(0.0, agg.energy - proj_sq / n);
    const double gain = (a2 - b2) / n * proj_sq + b2 * agg.energy +
                        2.0 * p.alpha_mag * std::sqrt(b2) / std::sqrt(n) *
                            agg.proj_rot * std::sqrt(residual);
    return user_snr(p) * std::max(0.0, gain);
}

double sinr_eav(const SystemParams& p, const Eigen::VectorXcd& h_e,
                const BeamformerBasis& basis) {
    const double signal =
        p.data_power() * std::norm(p.c2) * std::norm(basis.t1.dot(h_e));
    const double leak =
        p.an_power_per_stream() * (basis.null_basis.adjoint() * h_e).squaredNorm();
    return signal / (p.sigma_u * p.sigma_u + leak);
}

RateEstimate ergodic_rate_user_exact(const SystemParams& p,
                                     std::size_t samples, RngStream& rng) {
    if (samples < 10000)
        throw std::invalid_argument(
            "ergodic_rate_user_exact: samples must be >= 1e4");
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const SteeredAggregates agg = draw_surrogate_aggregates(
            p.n_tx, p.phase_alpha, p.phase_beta, rng);
        const double r = log2_1p(user_sinr_from_aggregates(p, agg));
        sum += r;
        sum_sq += r * r;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / n)};
}

RateEstimate ergodic_rate_user_tail_integral(const SystemParams& p,
                                             std::size_t samples_per_node,
                                             RngStream& rng) {
    // Upper rate limit: SINR exceeds snr * (mean + 12 sd) of the signal
    // gain with negligible probability.
    const double n = static_cast<double>(p.n_tx);
    const double gain_hi = n + 12.0 * std::sqrt(2.0 * n);
    const double t_hi = log2_1p(user_snr(p) * gain_hi);
    if (!(t_hi > 0.0)) return {0.0, 0.0};

    const int segments = 256;  // composite Simpson, even count
    const double step = t_hi / segments;
    double value = 0.0, var = 0.0;
    for (int k = 0; k <= segments; ++k) {
        const double t = step * static_cast<double>(k);
        const double threshold = std::exp2(t) - 1.0;
        std::size_t hits = 0;
        for (std::size_t s = 0; s < samples_per_node; ++s) {
            const SteeredAggregates agg = draw_surrogate_aggregates(
                p.n_tx, p.phase_alpha, p.phase_beta, rng);
            if (user_sinr_from_aggregates(p, agg) > threshold) ++hits;
        }
        const double prob = static_cast<double>(hits) /
                            static_cast<double>(samples_per_node);
        double w = (k == 0 || k == segments) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        w *= step / 3.0;
        value += w * prob;
        var += w * w * prob * (1.0 - prob) /
               static_cast<double>(samples_per_node);
    }
    return {value, std::sqrt(var)};
}

double ergodic_rate_user_ub1(const SystemParams& p) {
    const double snr = user_snr(p);
    if (!(snr > 0.0)) return 0.0;
    const int n = p.n_tx;
    const double log_norm = std::lgamma(static_cast<double>(n));
    const auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double log_pdf = (n - 1) * std::log(x) - x - log_norm;
        return log2_1p(snr * x) * std::exp(log_pdf);
    };
    return integrate_to_infinity(integrand, 1e-10);
}

double ergodic_rate_user_ub1_taylor(const SystemParams& p) {
    const double snr = user_snr(p);
    const double n = static_cast<double>(p.n_tx);
    const double denom = 1.0 + snr * n;
    return log2_1p(snr * n) - kLog2e * snr * snr / (denom * denom) * n / 2.0;
}

double ergodic_rate_user_ub2(const SystemParams& p) {
    const double a2 = p.alpha_mag * p.alpha_mag;
    const double mean_sinr =
        user_snr(p) * (a2 + (1.0 - a2) * (p.n_tx - 1.0));
    return log2_1p(mean_sinr);
}

double ergodic_rate_eav_integrand(const SystemParams& p, double t) {
    const double c1 = p.data_power() * std::norm(p.c2) / (p.sigma_u * p.sigma_u);
    const double c2 = p.an_power_per_stream() / (p.sigma_u * p.sigma_u);
    const double big_t = std::exp2(t) - 1.0;
    return std::exp(-big_t / (2.0 * c1)) *
           std::pow(1.0 + big_t * c2 / c1, -(p.n_tx - 2.0));
}

double ergodic_rate_eav(const SystemParams& p) {
    if (!(p.tau > 0.0)) return 0.0;
    return integrate_to_infinity(
        [&](double t) { return ergodic_rate_eav_integrand(p, t); }, 1e-8);
}

RateEstimate ergodic_rate_eav_reference_mc(const SystemParams& p,
                                           std::size_t samples,
                                           RngStream& rng) {
    const double c1 = p.data_power() * std::norm(p.c2) / (p.sigma_u * p.sigma_u);
    const double c2 = p.an_power_per_stream() / (p.sigma_u * p.sigma_u);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.exponential(2.0);
        const double y = rng.gamma_int_shape(p.n_tx - 2, 2.0);
        const double r = log2_1p(c1 * x / (1.0 + c2 * y));
        sum += r;
        sum_sq += r * r;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / n)};
}

RateBreakdown secrecy_rate(const SystemParams& p, std::size_t samples,
                           RngStream& rng) {
    RateBreakdown out;
    if (p.tau > 0.0) {
        const RateEstimate user = ergodic_rate_user_exact(p, samples, rng);
        out.user_rate = user.value;
        out.user_std_error = user.std_error;
        out.eav_rate = ergodic_rate_eav(p);
    }
    out.secrecy_rate = std::max(0.0, out.user_rate - out.eav_rate);
    return out;
}

}  // namespace isac
