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

#include "isac/system_model.hpp"

#include <stdexcept>
#include <string>

namespace isac {

void SystemParams::validate() const {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("SystemParams: " + msg);
    };
    if (n_tx < 3) fail("n_tx must be >= 3 (AN nullspace needs n_tx - 2 >= 1)");
    if (m_rx < 1) fail("m_rx must be >= 1");
    if (n_eav < 1) fail("n_eav must be >= 1");
    if (frame_len <= n_tx) fail("frame_len must exceed n_tx");
    if (!(power > 0.0)) fail("power must be positive");
    if (!(tau >= 0.0 && tau <= 1.0)) fail("tau must lie in [0, 1]");
    if (!(sigma_u > 0.0)) fail("sigma_u must be positive");
    if (!(sigma_r > 0.0)) fail("sigma_r must be positive");
    if (!(alpha_mag >= 0.0 && alpha_mag <= 1.0)) fail("alpha_mag must lie in [0, 1]");
    if (!(delta > 0.0 && delta < std::numbers::pi / 2.0))
        fail("delta must lie in (0, pi/2)");
}

Eigen::VectorXcd steering_vector(double angle, int count) {
    Eigen::VectorXcd v(count);
    const double s = std::numbers::pi * std::sin(angle) * 0.5;
    for (int i = 0; i < count; ++i) {
        const double f = s * static_cast<double>(count - (2 * i + 1));
        v[i] = std::polar(1.0, -f);
    }
    return v;
}

Eigen::VectorXcd steering_derivative(double angle, int count) {
    Eigen::VectorXcd v(count);
    const double s = std::numbers::pi * std::sin(angle) * 0.5;
    const double c = std::numbers::pi * std::cos(angle) * 0.5;
    for (int i = 0; i < count; ++i) {
        const double k = static_cast<double>(count - (2 * i + 1));
        v[i] = cxd{0.0, -c * k} * std::polar(1.0, -s * k);
    }
    return v;
}

double steering_derivative_norm_sq(double angle, int count) {
    const double c = std::cos(angle);
    const double n = static_cast<double>(count);
    return std::numbers::pi * std::numbers::pi * c * c * n * (n * n - 1.0) / 12.0;
}

ChannelRealization sample_realization(const SystemParams& params, RngStream& rng) {
    ChannelRealization r;
    r.h.resize(params.n_tx);
    r.h_e.resize(params.n_tx);
    for (int i = 0; i < params.n_tx; ++i) r.h[i] = rng.complex_normal();
    for (int i = 0; i < params.n_tx; ++i) r.h_e[i] = rng.complex_normal();
    constexpr double half_pi = std::numbers::pi / 2.0;
    r.theta = rng.uniform(-half_pi, half_pi);
    r.phi = rng.uniform(-half_pi, half_pi);
    return r;
}

SteeredAggregates steered_aggregates(const Eigen::VectorXcd& h, double angle,
                                     double rot) {
    const int n = static_cast<int>(h.size());
    const double s = std::numbers::pi * std::sin(angle) * 0.5;
    cxd z{0.0, 0.0};
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = s * static_cast<double>(n - (2 * i + 1));
        z += std::polar(1.0, f) * h[i];
        energy += std::norm(h[i]);
    }
    SteeredAggregates agg;
    agg.proj_re = z.real();
    agg.proj_im = z.imag();
    agg.energy = energy;
    agg.proj_rot = (std::polar(1.0, rot) * z).real();
    return agg;
}

}  // namespace isac
