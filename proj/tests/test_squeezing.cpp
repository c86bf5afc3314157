#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "freqjump/squeezing.hpp"

using namespace freqjump;

namespace {
constexpr double pi = std::numbers::pi;

ProtocolConfig make_cfg(double w0, double d, double a, double T, int n) {
    ProtocolConfig c;
    c.omega0 = w0;
    c.delta = d;
    c.alpha = a;
    c.total_time = T;
    c.n_jumps = n;
    return c;
}
}  // namespace

TEST_CASE("squeeze parameters worked example") {
    // quarter period of omega1 = 2 from omega0 = 1: r = ln 2, phi = 0
    const SqueezeParams sp = squeeze_params(1.0, 2.0, pi / 4);
    CHECK(std::abs(sp.r - std::log(2.0)) < 1e-12);
    CHECK(std::abs(sp.phi) < 1e-12);
    CHECK_THROWS_AS(squeeze_params(0.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("closed form matches the propagator") {
    std::mt19937 rng(20817);
    std::uniform_real_distribution<double> uw(0.1, 5.0), ut(0.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double w0 = uw(rng), w1 = uw(rng), t = ut(rng);
        const GaussianState a = squeeze_covariance(squeeze_params(w0, w1, t));
        const GaussianState b =
            congruence(jump_propagator(w0, w1, t), GaussianState::vacuum());
        CHECK(std::abs(a.sxx - b.sxx) < 1e-12 * std::max(1.0, std::abs(b.sxx)));
        CHECK(std::abs(a.sxy - b.sxy) < 1e-12 * std::max(1.0, std::abs(b.sxy)));
        CHECK(std::abs(a.syy - b.syy) < 1e-12 * std::max(1.0, std::abs(b.syy)));
    }
}

TEST_CASE("extract inverts the reconstruction") {
    std::mt19937 rng(318);
    std::uniform_real_distribution<double> ur(0.0, 3.0), up(-3.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double r = ur(rng);
        const double phi = up(rng);
        SqueezeParams sp;
        sp.r = r;
        sp.phi = phi;
        const SqueezeParams back = extract_squeeze(squeeze_covariance(sp));
        CHECK(std::abs(back.r - r) < 1e-9);
        if (r > 1e-6) CHECK(std::abs(back.phi - phi) < 1e-8);
    }
    const SqueezeParams zero = extract_squeeze(GaussianState::vacuum());
    CHECK(zero.r == 0.0);
    CHECK(zero.phi == 0.0);
}

TEST_CASE("extract rejects mixed states") {
    CHECK_THROWS_AS(extract_squeeze(GaussianState{1.0, 0.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("r_max marker") {
    CHECK(std::abs(r_max(1.0, 1.0) - std::log(2.0)) < 1e-15);
    CHECK(std::abs(r_max(1.0, 2.0) - std::log(3.0)) < 1e-15);
    CHECK(std::abs(r_max(1.0, -0.5) - std::log(2.0)) < 1e-15);
    CHECK_THROWS_AS(r_max(1.0, -1.0), std::invalid_argument);

    // a single jump segment never squeezes past r_max
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uw(0.2, 4.0), ud(-0.15, 4.0),
        ut(0.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double w0 = uw(rng), d = ud(rng), t = ut(rng);
        const SqueezeParams sp = squeeze_params(w0, w0 + d, t);
        CHECK(sp.r <= r_max(w0, d) + 1e-12);
    }
}

TEST_CASE("alpha_max quarter-period rule") {
    const AlphaMax a = alpha_max(1.0, 1.0, 1.0);
    CHECK(std::abs(a.value - pi / 4) < 1e-15);
    CHECK_FALSE(a.clamped);
    const AlphaMax b = alpha_max(1.0, 1.0, 0.1);
    CHECK(b.value == 1.0);
    CHECK(b.clamped);
    CHECK_THROWS_AS(alpha_max(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("squeezing quanta") {
    SqueezeParams sp;
    sp.r = std::log(2.0);
    const ResourceAccount acct = nbar_from_squeeze(sp);
    CHECK(std::abs(acct.nbar - 9.0 / 16.0) < 1e-15);
    CHECK(std::abs(acct.var_n - 2.0 * (9.0 / 16.0) * (25.0 / 16.0)) < 1e-15);
}

TEST_CASE("peak squeezing dominates the endpoint") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> uw(0.3, 3.0), ud(0.2, 2.5),
        ua(0.0, 1.0), ut(0.2, 6.0);
    std::uniform_int_distribution<int> un(1, 4);
    for (int i = 0; i < 60; ++i) {
        const ProtocolConfig cfg =
            make_cfg(uw(rng), ud(rng), ua(rng), ut(rng), un(rng));
        const double peak = max_squeeze_along(cfg);
        const double end = extract_squeeze(evolve_vacuum(cfg)).r;
        CHECK(peak >= end - 1e-9);
    }
    // quarter period at alpha = 1 peaks exactly at r_max
    const double peak = max_squeeze_along(make_cfg(1.0, 1.0, 1.0, pi / 4, 1));
    CHECK(std::abs(peak - std::log(2.0)) < 1e-12);
}
