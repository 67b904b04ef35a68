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

#include "isac/crb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace isac {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSchurFloor = 1e-14;
constexpr double kPi = std::numbers::pi;
}  // namespace

FimBlocks fim_complex_gaussian(const std::array<Eigen::VectorXcd, 3>& d,
                               double noise_var) {
    if (d[0].size() != d[1].size() || d[1].size() != d[2].size())
        throw std::invalid_argument(
            "fim_complex_gaussian: derivative vectors must share one length");
    const double scale = 2.0 / noise_var;
    auto entry = [&](int i, int j) { return scale * d[i].dot(d[j]).real(); };

    FimBlocks f;
    f.f_theta_theta = entry(0, 0);
    f.f_theta_alpha << entry(0, 1), entry(0, 2);
    f.f_alpha_alpha << entry(1, 1), entry(1, 2), entry(2, 1), entry(2, 2);
    return f;
}

CrbResult crb_from_blocks(const FimBlocks& blocks) {
    // 2x2 symmetric eigenvalues in closed form.
    const double a = blocks.f_alpha_alpha(0, 0);
    const double b = blocks.f_alpha_alpha(1, 1);
    const double c = 0.5 * (blocks.f_alpha_alpha(0, 1) + blocks.f_alpha_alpha(1, 0));
    const double mean = 0.5 * (a + b);
    const double rad = std::sqrt(0.25 * (a - b) * (a - b) + c * c);
    const double eig_min = mean - rad;
    const double eig_max = mean + rad;

    if (eig_min <= 1e-14 * std::max(eig_max, 0.0) || eig_max <= 0.0) {
        return {kInf, CrbFailure::singular_nuisance_block};
    }
    const double det = a * b - c * c;
    const Eigen::RowVector2d ft = blocks.f_theta_alpha;
    const double quad =
        (ft(0) * (b * ft(0) - c * ft(1)) + ft(1) * (a * ft(1) - c * ft(0))) / det;
    const double schur = blocks.f_theta_theta - quad;
    if (schur <= kSchurFloor * blocks.f_theta_theta) {
        return {kInf, CrbFailure::nonpositive_information};
    }
    return {1.0 / schur, CrbFailure::none};
}

double crb_theta_common(const SystemParams& p, const Eigen::VectorXcd& h,
                        double theta) {
    const int n = p.n_tx;
    const double s = kPi * std::sin(theta) * 0.5;
    const double c = kPi * std::cos(theta) * 0.5;

    // Elementwise sums of the rotated channel and its derivative weighting.
    double sum_re = 0.0, sum_im = 0.0, energy = 0.0;
    double wsum_re = 0.0, wsum_im = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = static_cast<double>(n - (2 * i + 1));
        const cxd rotated = std::polar(1.0, s * k) * h[i];
        const double fp = c * k;
        sum_re += rotated.real();
        sum_im += rotated.imag();
        energy += std::norm(h[i]);
        wsum_re += fp * rotated.real();   // sum f'_i r_i
        wsum_im += -fp * rotated.imag();  // sum -f'_i t_i
    }

    const double bprime_sq = steering_derivative_norm_sq(theta, p.m_rx);
    const double aprime_sq = steering_derivative_norm_sq(theta, n);
    const double g1 = p.data_power();
    const double g2 = p.an_power_per_stream();
    const double alpha_sq = p.alpha_mag * p.alpha_mag;

    const double residual = energy - (sum_re * sum_re + sum_im * sum_im) / n;
    const double fluct = wsum_im * wsum_im + wsum_re * wsum_re;
    const double denom =
        g1 * bprime_sq * n * alpha_sq +
        g2 * p.m_rx * (aprime_sq - (residual > 0.0 ? fluct / residual : 0.0));
    if (!(denom > 0.0)) return kInf;
    return p.crb_noise_scale() / denom;
}

double crb_theta_exact(const SystemParams& p, double theta) {
    const double cth = std::cos(theta);
    const double m = static_cast<double>(p.m_rx);
    const double denom = static_cast<double>(p.frame_len) * std::norm(p.c3) *
                         p.data_power() * p.n_tx * p.alpha_mag * p.alpha_mag *
                         kPi * kPi * cth * cth * m * (m * m - 1.0);
    if (!(denom > 0.0)) return kInf;
    return 6.0 * p.sigma_r * p.sigma_r / denom;
}

double crb_phi(const SystemParams& p, double phi) {
    const double cph = std::cos(phi);
    const double ne = static_cast<double>(p.n_eav);
    const double denom = static_cast<double>(p.frame_len) * std::norm(p.c4) *
                         p.data_power() * p.n_tx * p.alpha_mag * p.alpha_mag *
                         kPi * kPi * cph * cph * ne * (ne * ne - 1.0);
    if (!(denom > 0.0)) return kInf;
    return 6.0 * p.sigma_r * p.sigma_r / denom;
}

namespace {

double bracket_gain_terms(const SystemParams& p, double correction) {
    const double m = static_cast<double>(p.m_rx);
    const double n = static_cast<double>(p.n_tx);
    return p.data_power() * p.alpha_mag * p.alpha_mag * (m * m - 1.0) +
           p.an_power_per_stream() * (n * n - 1.0) * correction;
}

double scale_over_bracket(const SystemParams& p, double theta, double bracket) {
    if (!(bracket > 0.0) || !std::isfinite(bracket)) return kInf;
    const double cth = std::cos(theta);
    const double denom = cth * cth * bracket;
    if (!(denom > 0.0)) return kInf;
    return angle_flat_scale(p) / denom;
}

}  // namespace

double angle_flat_scale(const SystemParams& p) {
    return 6.0 * p.sigma_r * p.sigma_r /
           (static_cast<double>(p.frame_len) * std::norm(p.c3) * kPi * kPi *
            p.m_rx * p.n_tx);
}

double info_bracket_upper(const SystemParams& p, double proj_re,
                          double proj_im, double energy) {
    const double proj_sq = proj_re * proj_re + proj_im * proj_im;
    const double residual = energy - proj_sq / p.n_tx;
    // Physical draws always have positive residual energy; Gaussian-limit
    // draws that violate it are unidentifiable and map to +infinity.
    if (!(residual > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double inner = 1.0 - proj_sq / (static_cast<double>(p.n_tx) * energy);
    return bracket_gain_terms(p, 1.0 - 1.0 / inner);
}

double info_bracket_approx(const SystemParams& p, double proj_re,
                           double proj_im, double energy) {
    const double residual =
        energy - (proj_re * proj_re + proj_im * proj_im) / p.n_tx;
    if (!(residual > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return bracket_gain_terms(p, 1.0 - 1.0 / residual);
}

double crb_theta_lower_bound(const SystemParams& p, double theta) {
    return scale_over_bracket(p, theta, bracket_gain_terms(p, 1.0));
}

double crb_theta_upper_from_aggregates(const SystemParams& p, double theta,
                                       double proj_re, double proj_im,
                                       double energy) {
    return scale_over_bracket(p, theta,
                              info_bracket_upper(p, proj_re, proj_im, energy));
}

double crb_theta_approx_from_aggregates(const SystemParams& p, double theta,
                                        double proj_re, double proj_im,
                                        double energy) {
    return scale_over_bracket(
        p, theta, info_bracket_approx(p, proj_re, proj_im, energy));
}

}  // namespace isac
