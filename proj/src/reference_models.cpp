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

#include "isac/reference_models.hpp"

#include <cmath>
#include <limits>

#include "isac/beamforming.hpp"
#include "isac/crb.hpp"

namespace isac::reference {

namespace {

Eigen::VectorXcd as_vector(const Eigen::MatrixXcd& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

}  // namespace

double crb_theta_trace_form(const SystemParams& p, const Eigen::VectorXcd& h,
                            double theta) {
    const Eigen::VectorXcd a = steering_vector(theta, p.n_tx);
    const Eigen::VectorXcd ad = steering_derivative(theta, p.n_tx);
    const Eigen::VectorXcd b = steering_vector(theta, p.m_rx);
    const Eigen::VectorXcd bd = steering_derivative(theta, p.m_rx);

    const BeamformerBasis basis = build_basis(a, h, p.alpha(), p.beta());
    const Eigen::MatrixXcd rx = transmit_covariance(basis, p);

    const Eigen::MatrixXcd big_a = b * a.adjoint();
    const Eigen::MatrixXcd big_ad = bd * a.adjoint() + b * ad.adjoint();

    const cxd t_aa = (big_a.adjoint() * big_a * rx).trace();
    const cxd t_dd = (big_ad.adjoint() * big_ad * rx).trace();
    const cxd t_da = (big_ad.adjoint() * big_a * rx).trace();

    const double denom = 2.0 * std::norm(p.c3) * p.frame_len *
                         (t_aa.real() * t_dd.real() - std::norm(t_da));
    if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
    return p.sigma_r * p.sigma_r * t_aa.real() / denom;
}

double crb_theta_numeric_fim(const SystemParams& p, const Eigen::VectorXcd& h,
                             double theta, RngStream& rng) {
    const Eigen::VectorXcd a = steering_vector(theta, p.n_tx);
    const Eigen::VectorXcd ad = steering_derivative(theta, p.n_tx);
    const Eigen::VectorXcd b = steering_vector(theta, p.m_rx);
    const Eigen::VectorXcd bd = steering_derivative(theta, p.m_rx);

    const BeamformerBasis basis = build_basis(a, h, p.alpha(), p.beta());
    const WaveformBlock block = build_waveform(basis, p, rng);

    const Eigen::MatrixXcd big_a = b * a.adjoint();
    const Eigen::MatrixXcd big_ad = bd * a.adjoint() + b * ad.adjoint();

    const Eigen::VectorXcd echo = as_vector(big_a * block.x);
    const Eigen::VectorXcd echo_slope = as_vector(big_ad * block.x);

    const FimBlocks fim = fim_complex_gaussian(
        {p.c3 * echo_slope, echo, cxd{0.0, 1.0} * echo},
        p.sigma_r * p.sigma_r);
    return crb_from_blocks(fim).value;
}

double crb_theta_collapsed_numeric(const SystemParams& p,
                                   const Eigen::VectorXcd& h, double theta,
                                   RngStream& rng) {
    const Eigen::VectorXcd a = steering_vector(theta, p.n_tx);
    const Eigen::VectorXcd b = steering_vector(theta, p.m_rx);
    const Eigen::VectorXcd bd = steering_derivative(theta, p.m_rx);

    const BeamformerBasis basis = build_basis(a, h, p.alpha(), p.beta());
    const WaveformBlock block = build_waveform(basis, p, rng);

    const double gain =
        std::sqrt(static_cast<double>(p.n_tx)) * std::sqrt(p.data_power());
    const Eigen::VectorXcd mean_b = as_vector(b * block.s_u);
    const Eigen::VectorXcd mean_bd = as_vector(bd * block.s_u);

    const cxd alpha = p.alpha();
    const FimBlocks fim = fim_complex_gaussian(
        {alpha * p.c3 * gain * mean_bd, alpha * gain * mean_b,
         cxd{0.0, 1.0} * alpha * gain * mean_b},
        p.sigma_r * p.sigma_r);
    return crb_from_blocks(fim).value;
}

}  // namespace isac::reference
