#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "isac/beamforming.hpp"
#include "isac/crb.hpp"
#include "isac/reference_models.hpp"

using namespace isac;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_dev(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("fim_complex_gaussian basic algebra") {
    SUBCASE("orthogonal derivative vectors give a diagonal FIM") {
        Eigen::VectorXcd d0 = Eigen::VectorXcd::Zero(4);
        Eigen::VectorXcd d1 = Eigen::VectorXcd::Zero(4);
        Eigen::VectorXcd d2 = Eigen::VectorXcd::Zero(4);
        d0[0] = {1.0, 2.0};
        d1[1] = {0.0, -3.0};
        d2[2] = {2.5, 0.0};
        const FimBlocks f = fim_complex_gaussian({d0, d1, d2}, 2.0);
        CHECK(f.f_theta_alpha.norm() == 0.0);
        CHECK(f.f_alpha_alpha(0, 1) == 0.0);
        CHECK(f.f_theta_theta == doctest::Approx(5.0));       // (2/2)|d0|^2
        CHECK(f.f_alpha_alpha(0, 0) == doctest::Approx(9.0));
        CHECK(f.f_alpha_alpha(1, 1) == doctest::Approx(6.25));
    }

    SUBCASE("scaling all derivatives by s scales the FIM by s^2") {
        RngStream rng = RngStream::from(31, "fim-scale");
        std::array<Eigen::VectorXcd, 3> d;
        for (auto& v : d) {
            v.resize(6);
            for (int i = 0; i < 6; ++i) v[i] = rng.complex_normal();
        }
        const FimBlocks base = fim_complex_gaussian(d, 1.3);
        const double s = 2.7;
        for (auto& v : d) v *= s;
        const FimBlocks scaled = fim_complex_gaussian(d, 1.3);
        CHECK(scaled.f_theta_theta ==
              doctest::Approx(s * s * base.f_theta_theta).epsilon(1e-12));
        CHECK(scaled.f_alpha_alpha(0, 0) ==
              doctest::Approx(s * s * base.f_alpha_alpha(0, 0)).epsilon(1e-12));
        CHECK(scaled.f_theta_alpha(1) ==
              doctest::Approx(s * s * base.f_theta_alpha(1)).epsilon(1e-12));
    }

    SUBCASE("collapsed echo model reproduces the closed-form information") {
        SystemParams p;
        RngStream rng = RngStream::from(32, "fim-echo");
        const ChannelRealization ch = sample_realization(p, rng);
        const BeamformerBasis basis = build_basis(
            steering_vector(ch.theta, p.n_tx), ch.h, p.alpha(), p.beta());
        const WaveformBlock block = build_waveform(basis, p, rng);
        const Eigen::VectorXcd bd = steering_derivative(ch.theta, p.m_rx);
        const double gain =
            std::sqrt(static_cast<double>(p.n_tx)) * std::sqrt(p.data_power());
        Eigen::MatrixXcd slope = bd * block.s_u;
        const Eigen::VectorXcd d0 =
            p.alpha() * p.c3 * gain *
            Eigen::Map<const Eigen::VectorXcd>(slope.data(), slope.size());
        Eigen::MatrixXcd flat = steering_vector(ch.theta, p.m_rx) * block.s_u;
        const Eigen::VectorXcd d1 =
            p.alpha() * gain *
            Eigen::Map<const Eigen::VectorXcd>(flat.data(), flat.size());
        const FimBlocks f = fim_complex_gaussian(
            {d0, d1, cxd{0.0, 1.0} * d1}, p.sigma_r * p.sigma_r);
        const double expected = 2.0 * p.frame_len * p.data_power() * p.n_tx *
                                std::norm(p.alpha()) * std::norm(p.c3) *
                                bd.squaredNorm() / (p.sigma_r * p.sigma_r);
        CHECK(f.f_theta_theta == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("crb_from_blocks") {
    SUBCASE("block-diagonal case inverts the angle information") {
        FimBlocks f;
        f.f_theta_theta = 4.0;
        f.f_alpha_alpha << 2.0, 0.0, 0.0, 3.0;
        const CrbResult r = crb_from_blocks(f);
        CHECK(r.failure == CrbFailure::none);
        CHECK(r.value == doctest::Approx(0.25));
    }

    SUBCASE("zero Schur complement reports unidentifiability") {
        FimBlocks f;
        f.f_theta_theta = 2.0;
        f.f_theta_alpha << 2.0, 0.0;
        f.f_alpha_alpha << 2.0, 0.0, 0.0, 2.0;
        const CrbResult r = crb_from_blocks(f);
        CHECK(r.value == kInf);
        CHECK(r.failure == CrbFailure::nonpositive_information);
    }

    SUBCASE("singular nuisance block is flagged") {
        FimBlocks f;
        f.f_theta_theta = 2.0;
        f.f_theta_alpha << 1.0, 1.0;
        f.f_alpha_alpha << 1.0, 1.0, 1.0, 1.0;
        const CrbResult r = crb_from_blocks(f);
        CHECK(r.value == kInf);
        CHECK(r.failure == CrbFailure::singular_nuisance_block);
    }

    SUBCASE("random SPD FIM matches the direct 3x3 inverse") {
        RngStream rng = RngStream::from(33, "crb-spd");
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::Matrix3d m;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m(r, c) = rng.normal();
            const Eigen::Matrix3d spd =
                m * m.transpose() + 0.5 * Eigen::Matrix3d::Identity();
            FimBlocks f;
            f.f_theta_theta = spd(0, 0);
            f.f_theta_alpha << spd(0, 1), spd(0, 2);
            f.f_alpha_alpha = spd.bottomRightCorner<2, 2>();
            const CrbResult r = crb_from_blocks(f);
            CHECK(r.failure == CrbFailure::none);
            CHECK(r.value ==
                  doctest::Approx(spd.inverse()(0, 0)).epsilon(1e-10));
        }
    }
}

TEST_CASE("CRB oracle chain: closed form = trace form = numeric FIM") {
    SystemParams p;
    RngStream rng = RngStream::from(34, "crb-chain");
    double worst_trace = 0.0, worst_fim = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ChannelRealization ch = sample_realization(p, rng);
        const double closed = crb_theta_common(p, ch.h, ch.theta);
        worst_trace = std::max(
            worst_trace,
            rel_dev(closed, reference::crb_theta_trace_form(p, ch.h, ch.theta)));
        worst_fim = std::max(
            worst_fim,
            rel_dev(closed,
                    reference::crb_theta_numeric_fim(p, ch.h, ch.theta, rng)));
    }
    CHECK(worst_trace < 1e-8);
    CHECK(worst_fim < 1e-8);
}

TEST_CASE("collapsed-model CRB equals its numeric FIM") {
    SystemParams p;
    RngStream rng = RngStream::from(35, "crb-collapsed");
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ChannelRealization ch = sample_realization(p, rng);
        worst = std::max(
            worst,
            rel_dev(crb_theta_exact(p, ch.theta),
                    reference::crb_theta_collapsed_numeric(p, ch.h, ch.theta, rng)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("crb_theta_common edge cases") {
    SystemParams p;
    RngStream rng = RngStream::from(36, "crb-edges");
    const ChannelRealization ch = sample_realization(p, rng);

    SUBCASE("endfire angles are unidentifiable") {
        // cos(pi/2) rounds to ~6e-17, so the value is finite but explodes;
        // an exactly vanishing denominator would report +infinity.
        CHECK(crb_theta_common(p, ch.h, kPi / 2.0) > 1e30);
        CHECK(crb_theta_common(p, ch.h, -kPi / 2.0) > 1e30);
        SystemParams dead = p;
        dead.tau = 1.0;
        dead.alpha_mag = 0.0;  // no data beam and no AN nullspace power
        CHECK(crb_theta_common(dead, ch.h, 0.3) == kInf);
    }

    SUBCASE("all power on AN still yields a finite value") {
        SystemParams pt = p;
        pt.tau = 0.0;
        const double v = crb_theta_common(pt, ch.h, ch.theta);
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }
}

TEST_CASE("crb_theta_exact edge cases and collapse at full data power") {
    SystemParams p;
    RngStream rng = RngStream::from(37, "crb-exact");

    SUBCASE("no data beam means no echo information") {
        SystemParams pt = p;
        pt.tau = 0.0;
        CHECK(crb_theta_exact(pt, 0.3) == kInf);
        pt = p;
        pt.alpha_mag = 0.0;
        CHECK(crb_theta_exact(pt, 0.3) == kInf);
    }

    SUBCASE("equals the fixed-block form at full data power") {
        SystemParams pt = p;
        pt.tau = 1.0;
        for (int trial = 0; trial < 50; ++trial) {
            const ChannelRealization ch = sample_realization(pt, rng);
            CHECK(rel_dev(crb_theta_exact(pt, ch.theta),
                          crb_theta_common(pt, ch.h, ch.theta)) < 1e-9);
        }
    }

    SUBCASE("dominates the fixed-block value when AN carries power") {
        for (int trial = 0; trial < 50; ++trial) {
            const ChannelRealization ch = sample_realization(p, rng);
            CHECK(crb_theta_exact(p, ch.theta) >=
                  crb_theta_common(p, ch.h, ch.theta));
        }
    }
}

TEST_CASE("per-draw ordering: lower <= value <= upper substitutes") {
    SystemParams p;
    RngStream rng = RngStream::from(38, "crb-order");
    for (int trial = 0; trial < 200; ++trial) {
        const ChannelRealization ch = sample_realization(p, rng);
        const SteeredAggregates agg = steered_aggregates(ch.h, ch.theta);
        const double value = crb_theta_common(p, ch.h, ch.theta);
        const double lower = crb_theta_lower_bound(p, ch.theta);
        const double upper = crb_theta_upper_from_aggregates(
            p, ch.theta, agg.proj_re, agg.proj_im, agg.energy);
        CHECK(lower <= value * (1.0 + 1e-12));
        CHECK(value <= upper * (1.0 + 1e-12));
    }
}

TEST_CASE("crb_phi mirrors the BS closed form under a symbol swap") {
    SystemParams p;
    SystemParams swapped = p;
    swapped.n_eav = p.m_rx;
    swapped.c4 = p.c3;
    for (double angle : {-1.1, -0.2, 0.5, 1.3}) {
        CHECK(rel_dev(crb_phi(swapped, angle), crb_theta_exact(p, angle)) <
              1e-14);
    }

    SUBCASE("no data beam blinds the sensing eavesdropper") {
        SystemParams pt = p;
        pt.tau = 0.0;
        CHECK(crb_phi(pt, 0.4) == kInf);
    }

    SUBCASE("monotone improvement with more eavesdropper antennas") {
        double prev = kInf;
        for (int ne = 4; ne <= 64; ne *= 2) {
            SystemParams pt = p;
            pt.n_eav = ne;
            const double v = crb_phi(pt, 0.4);
            CHECK(v < prev);
            prev = v;
        }
    }
}
