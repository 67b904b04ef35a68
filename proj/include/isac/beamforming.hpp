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

#include <Eigen/Dense>
#include <stdexcept>

#include "isac/system_model.hpp"

namespace isac {

/// Raised when the user channel is (numerically) collinear with the target
/// steering direction, leaving the orthogonal component undefined. A
/// probability-zero event for continuous channel draws.
struct DegenerateChannel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orthonormal transmit frame: the steering direction a_hat, the channel
/// component h_hat orthogonal to it, the nullspace basis of both, and the
/// data beam t1 = alpha a_hat + beta h_hat.
/// [a_hat h_hat null_basis] is unitary by construction.
struct BeamformerBasis {
    Eigen::VectorXcd a_hat;       // steering direction, unit norm
    Eigen::VectorXcd h_hat;       // channel residual direction, unit norm
    Eigen::MatrixXcd null_basis;  // N x (N-2), orthonormal, orthogonal to both
    Eigen::VectorXcd t1;          // data beam, unit norm when |alpha|^2+|beta|^2=1
};

/// One transmitted block: the unit-power data stream, the artificial-noise
/// rows, and the resulting N x L waveform. The rows of [s_u; v_rows] are
/// made exactly orthogonal with exact row powers, so the sample covariance
/// of `x` equals transmit_covariance() up to rounding rather than up to
/// O(1/sqrt(L)) statistical error.
struct WaveformBlock {
    Eigen::RowVectorXcd s_u;  // 1 x L, (1/L) s_u s_u^H = 1 exactly
    Eigen::MatrixXcd v_rows;  // (N-2) x L, (1/L) v_i v_i^H = 1/(N-2) exactly
    Eigen::MatrixXcd x;       // N x L transmitted block
};

/// Builds the transmit frame from the raw steering vector `a` and channel
/// `h`. Throws DegenerateChannel when ||h - (a_hat^H h) a_hat|| <=
/// 1e-12 ||h||.
BeamformerBasis build_basis(const Eigen::VectorXcd& a, const Eigen::VectorXcd& h,
                            cxd alpha, cxd beta);

/// P tau t1 t1^H + (P(1-tau)/(N-2)) sum_i g_i g_i^H over the nullspace
/// columns. Hermitian PSD with trace exactly P.
Eigen::MatrixXcd transmit_covariance(const BeamformerBasis& basis,
                                     const SystemParams& params);

/// x = sqrt(P tau) t1 s_u + sqrt(P(1-tau)) G V with exactly orthogonal
/// rows (see WaveformBlock). Requires frame_len > n_tx.
WaveformBlock build_waveform(const BeamformerBasis& basis,
                             const SystemParams& params, RngStream& rng);

}  // namespace isac
