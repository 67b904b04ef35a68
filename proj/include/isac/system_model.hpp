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
#include <cmath>
#include <complex>
#include <numbers>

#include "isac/rng.hpp"

namespace isac {

using cxd = std::complex<double>;

/// All scenario constants for the downlink: a base station with n_tx
/// transmit / m_rx receive antennas serves a single-antenna user while
/// sensing a point target, watched by a single-antenna communication
/// eavesdropper and an n_eav-antenna sensing eavesdropper.
///
/// Default member values are the reference scenario used throughout the
/// test suite.
struct SystemParams {
    int n_tx = 15;      // BS transmit antennas N (>= 3 so the AN nullspace is nonempty)
    int m_rx = 17;      // BS receive antennas M
    int n_eav = 15;     // sensing-eavesdropper antennas
    int frame_len = 30; // radar pulse / frame length L, must exceed n_tx

    double power = 10.0;  // total BS transmit power P
    double tau = 0.76;    // fraction of power on the data beam
    double sigma_u = 1.0; // communication noise std (user and comm eavesdropper)
    double sigma_r = 1.0; // radar noise std

    cxd c1{3.16227766016837933e-2, 0.0};  // path gain BS -> user (sqrt(0.001))
    cxd c2{3.16227766016837933e-2, 0.0};  // path gain BS -> comm eavesdropper
    cxd c3{1.0e-3, 0.0};                  // round-trip gain BS <-> target
    cxd c4{1.0e-3, 0.0};                  // gain target -> sensing eavesdropper

    double alpha_mag = 0.2;   // |alpha| of the data-beam combination
    double phase_alpha = 0.0; // phase of alpha
    double phase_beta = 0.0;  // phase of beta
    double delta = 0.1;       // angle-domain truncation for ergodic CRBs

    cxd alpha() const { return std::polar(alpha_mag, phase_alpha); }

    /// beta is derived so that |alpha|^2 + |beta|^2 = 1, which makes the
    /// data beam a unit vector and `power` the true transmit power.
    cxd beta() const {
        return std::polar(std::sqrt(std::max(0.0, 1.0 - alpha_mag * alpha_mag)),
                          phase_beta);
    }

    double data_power() const { return power * tau; }

    double an_power_per_stream() const {
        return power * (1.0 - tau) / static_cast<double>(n_tx - 2);
    }

    /// sigma_r^2 / (2 |c3|^2 L), the noise scale of the BS angle CRB.
    double crb_noise_scale() const {
        return sigma_r * sigma_r /
               (2.0 * std::norm(c3) * static_cast<double>(frame_len));
    }

    /// Throws std::invalid_argument when any field is out of range.
    void validate() const;
};

/// One random draw of the scenario: user channel, comm-eavesdropper
/// channel, and the two target azimuths.
struct ChannelRealization {
    Eigen::VectorXcd h;    // BS -> user, length n_tx
    Eigen::VectorXcd h_e;  // BS -> comm eavesdropper, length n_tx
    double theta = 0.0;    // target azimuth at the BS
    double phi = 0.0;      // target azimuth at the sensing eavesdropper
};

/// Uniform linear array response. Element i (1-based) is exp(-j f_i) with
/// f_i = pi sin(angle) (count - (2i - 1)) / 2, so the phases are symmetric
/// about zero and the squared norm is exactly `count`.
Eigen::VectorXcd steering_vector(double angle, int count);

/// Elementwise derivative of steering_vector with respect to the angle.
/// Squared norm: pi^2 cos^2(angle) count (count^2 - 1) / 12.
Eigen::VectorXcd steering_derivative(double angle, int count);

/// Closed-form squared norm of steering_derivative.
double steering_derivative_norm_sq(double angle, int count);

/// Draws h, h_e with i.i.d. CN(0,1) entries and theta, phi uniform on
/// (-pi/2, pi/2). Consumes the stream in a fixed order (h, h_e, theta, phi).
ChannelRealization sample_realization(const SystemParams& params, RngStream& rng);

/// Aggregate statistics of a channel vector seen through the transmit
/// steering geometry at a given angle. With z = sum_i e^{j f_i} h_i:
///   proj_re  = Re z            proj_im = Im z
///   energy   = ||h||^2
///   proj_rot = Re(e^{j rot} z), the projection rotated by `rot`
/// These four sums drive both the angle CRB and the user SINR.
struct SteeredAggregates {
    double proj_re = 0.0;
    double proj_im = 0.0;
    double energy = 0.0;
    double proj_rot = 0.0;
};

SteeredAggregates steered_aggregates(const Eigen::VectorXcd& h, double angle,
                                     double rot = 0.0);

}  // namespace isac
