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

#include "isac/beamforming.hpp"

#include <cmath>

namespace isac {

BeamformerBasis build_basis(const Eigen::VectorXcd& a, const Eigen::VectorXcd& h,
                            cxd alpha, cxd beta) {
    const auto n = a.size();
    BeamformerBasis basis;
    basis.a_hat = a / a.norm();

    const Eigen::VectorXcd residual = h - basis.a_hat * (basis.a_hat.dot(h));
    if (residual.norm() <= 1e-12 * h.norm()) {
        throw DegenerateChannel(
            "build_basis: channel is collinear with the steering direction");
    }
    basis.h_hat = residual / residual.norm();
    basis.t1 = alpha * basis.a_hat + beta * basis.h_hat;

    // Nullspace of [a_hat h_hat]^H: the trailing N-2 columns of the full Q
    // factor. The basis is non-unique; downstream quantities depend only on
    // the projector I - a_hat a_hat^H - h_hat h_hat^H.
    Eigen::MatrixXcd pair(n, 2);
    pair.col(0) = basis.a_hat;
    pair.col(1) = basis.h_hat;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(pair);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    basis.null_basis = q.rightCols(n - 2);
    return basis;
}

Eigen::MatrixXcd transmit_covariance(const BeamformerBasis& basis,
                                     const SystemParams& params) {
    const double g1 = params.data_power();
    const double g2 = params.an_power_per_stream();
    Eigen::MatrixXcd r = g1 * (basis.t1 * basis.t1.adjoint());
    r.noalias() += g2 * (basis.null_basis * basis.null_basis.adjoint());
    return r;
}

WaveformBlock build_waveform(const BeamformerBasis& basis,
                             const SystemParams& params, RngStream& rng) {
    const int n = static_cast<int>(basis.a_hat.size());
    const int l = params.frame_len;
    const int an_rows = n - 2;

    // Draw N-1 Gaussian rows of length L and orthonormalize them jointly,
    // then rescale to the exact per-row powers. This removes the O(1/L)
    // sample-correlation error from the transmitted block.
    Eigen::MatrixXcd raw(l, an_rows + 1);
    for (int c = 0; c < an_rows + 1; ++c)
        for (int r = 0; r < l; ++r) raw(r, c) = rng.complex_normal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
    Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(l, an_rows + 1);

    WaveformBlock block;
    const double sqrt_l = std::sqrt(static_cast<double>(l));
    block.s_u = sqrt_l * q.col(0).adjoint();
    block.v_rows = (sqrt_l / std::sqrt(static_cast<double>(an_rows))) *
                   q.rightCols(an_rows).adjoint();

    block.x = std::sqrt(params.data_power()) * basis.t1 * block.s_u;
    block.x.noalias() += std::sqrt(params.power * (1.0 - params.tau)) *
                         (basis.null_basis * block.v_rows);
    return block;
}

}  // namespace isac
