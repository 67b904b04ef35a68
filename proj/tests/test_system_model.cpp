#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "isac/system_model.hpp"

using namespace isac;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("steering vector at broadside is all ones") {
    const Eigen::VectorXcd v = steering_vector(0.0, 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(v[i].real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(v[i].imag() == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("steering vector two-element example") {
    const Eigen::VectorXcd v = steering_vector(kPi / 6.0, 2);
    const cxd expected0 = std::polar(1.0, -kPi / 4.0);
    const cxd expected1 = std::polar(1.0, kPi / 4.0);
    CHECK(std::abs(v[0] - expected0) < 1e-14);
    CHECK(std::abs(v[1] - expected1) < 1e-14);
}

TEST_CASE("steering vector squared norm equals the element count") {
    RngStream rng = RngStream::from(7, "steer-norm");
    for (int trial = 0; trial < 1000; ++trial) {
        const double angle = rng.uniform(-kPi / 2.0, kPi / 2.0);
        const int count = 1 + static_cast<int>(rng.uniform() * 32.0);
        const Eigen::VectorXcd v = steering_vector(angle, count);
        CHECK(v.squaredNorm() ==
              doctest::Approx(static_cast<double>(count)).epsilon(1e-12));
    }
}

TEST_CASE("steering vector phase symmetry: mirrored elements conjugate") {
    RngStream rng = RngStream::from(8, "steer-sym");
    for (int trial = 0; trial < 100; ++trial) {
        const double angle = rng.uniform(-kPi / 2.0, kPi / 2.0);
        const int count = 2 + static_cast<int>(rng.uniform() * 16.0);
        const Eigen::VectorXcd v = steering_vector(angle, count);
        for (int i = 0; i < count; ++i) {
            CHECK(std::abs(v[i] - std::conj(v[count - 1 - i])) < 1e-14);
        }
    }
}

TEST_CASE("steering derivative norm matches the closed form") {
    RngStream rng = RngStream::from(9, "steer-deriv");
    for (int trial = 0; trial < 200; ++trial) {
        const double angle = rng.uniform(-kPi / 2.0, kPi / 2.0);
        const int count = 2 + static_cast<int>(rng.uniform() * 24.0);
        const Eigen::VectorXcd d = steering_derivative(angle, count);
        const double expected = steering_derivative_norm_sq(angle, count);
        CHECK(d.squaredNorm() == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("steering derivative is orthogonal to the steering vector") {
    RngStream rng = RngStream::from(10, "steer-orth");
    for (int trial = 0; trial < 200; ++trial) {
        const double angle = rng.uniform(-kPi / 2.0, kPi / 2.0);
        const int count = 1 + static_cast<int>(rng.uniform() * 24.0);
        const Eigen::VectorXcd v = steering_vector(angle, count);
        const Eigen::VectorXcd d = steering_derivative(angle, count);
        CHECK(std::abs(v.dot(d)) < 1e-10 * std::max(1.0, d.norm()));
    }
}

TEST_CASE("steering derivative vanishes at endfire") {
    const Eigen::VectorXcd d_pos = steering_derivative(kPi / 2.0, 6);
    const Eigen::VectorXcd d_neg = steering_derivative(-kPi / 2.0, 9);
    CHECK(d_pos.norm() < 1e-12);
    CHECK(d_neg.norm() < 1e-12);
}

TEST_CASE("steering derivative matches central finite differences") {
    const double eps = 1e-5;
    RngStream rng = RngStream::from(11, "steer-fd");
    for (int trial = 0; trial < 50; ++trial) {
        const double angle = rng.uniform(-1.4, 1.4);
        const int count = 3 + static_cast<int>(rng.uniform() * 12.0);
        const Eigen::VectorXcd d = steering_derivative(angle, count);
        const Eigen::VectorXcd fd =
            (steering_vector(angle + eps, count) -
             steering_vector(angle - eps, count)) /
            (2.0 * eps);
        CHECK((d - fd).norm() < 1e-7 * std::max(1.0, d.norm()));
    }
}

TEST_CASE("channel sampling moments and determinism") {
    SystemParams params;
    RngStream rng = RngStream::from(42, "chan-moments");
    const int draws = 100000 / params.n_tx + 1;
    double sum_sq = 0.0, sum_quad = 0.0;
    std::size_t count = 0;
    double theta_min = 10.0, theta_max = -10.0;
    for (int d = 0; d < draws; ++d) {
        const ChannelRealization ch = sample_realization(params, rng);
        for (int i = 0; i < params.n_tx; ++i) {
            const double mag_sq = std::norm(ch.h[i]);
            sum_sq += mag_sq;
            sum_quad += mag_sq * mag_sq;
            ++count;
        }
        theta_min = std::min(theta_min, ch.theta);
        theta_max = std::max(theta_max, ch.theta);
    }
    const double n = static_cast<double>(count);
    CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(sum_quad / n == doctest::Approx(2.0).epsilon(0.025));
    CHECK(theta_min > -kPi / 2.0);
    CHECK(theta_max < kPi / 2.0);

    RngStream rng_a = RngStream::from(1234, "chan-det");
    RngStream rng_b = RngStream::from(1234, "chan-det");
    const ChannelRealization a = sample_realization(params, rng_a);
    const ChannelRealization b = sample_realization(params, rng_b);
    CHECK(a.h == b.h);
    CHECK(a.h_e == b.h_e);
    CHECK(a.theta == b.theta);
    CHECK(a.phi == b.phi);
}

TEST_CASE("steered aggregates match direct inner products") {
    SystemParams params;
    RngStream rng = RngStream::from(5, "agg");
    for (int trial = 0; trial < 50; ++trial) {
        const ChannelRealization ch = sample_realization(params, rng);
        const Eigen::VectorXcd a = steering_vector(ch.theta, params.n_tx);
        const cxd inner = a.dot(ch.h);  // sum e^{j f_i} h_i
        const SteeredAggregates agg = steered_aggregates(ch.h, ch.theta, 0.3);
        CHECK(agg.proj_re == doctest::Approx(inner.real()).epsilon(1e-10));
        CHECK(agg.proj_im == doctest::Approx(inner.imag()).epsilon(1e-10));
        CHECK(agg.energy == doctest::Approx(ch.h.squaredNorm()).epsilon(1e-12));
        const cxd rotated = std::polar(1.0, 0.3) * inner;
        CHECK(agg.proj_rot == doctest::Approx(rotated.real()).epsilon(1e-10));
    }
}

TEST_CASE("parameter validation rejects out-of-range fields") {
    SystemParams p;
    CHECK_NOTHROW(p.validate());
    SystemParams bad = p;
    bad.n_tx = 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.frame_len = p.n_tx;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.tau = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.delta = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("derived beam weights satisfy the unit power split") {
    SystemParams p;
    p.alpha_mag = 0.37;
    p.phase_alpha = 0.9;
    p.phase_beta = -1.1;
    CHECK(std::norm(p.alpha()) + std::norm(p.beta()) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::arg(p.alpha()) == doctest::Approx(0.9));
    CHECK(std::arg(p.beta()) == doctest::Approx(-1.1));
}
