#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "freqjump/dynamics.hpp"

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

TEST_CASE("rotation propagator") {
    const Symplectic2 q = rotation_propagator(1.0, pi / 2);
    CHECK(std::abs(q.m11) < 1e-15);
    CHECK(std::abs(q.m12 - 1.0) < 1e-15);
    CHECK(std::abs(q.m21 + 1.0) < 1e-15);
    CHECK(std::abs(q.m22) < 1e-15);

    const Symplectic2 full = rotation_propagator(1.0, 2 * pi);
    CHECK(std::abs(full.m11 - 1.0) < 1e-12);
    CHECK(std::abs(full.m12) < 1e-12);

    CHECK_THROWS_AS(rotation_propagator(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rotation_propagator(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("jump propagator worked example") {
    const Symplectic2 m = jump_propagator(1.0, 2.0, pi / 4);
    CHECK(std::abs(m.m11) < 1e-15);
    CHECK(std::abs(m.m12 - 0.5) < 1e-15);
    CHECK(std::abs(m.m21 + 2.0) < 1e-15);
    CHECK(std::abs(m.m22) < 1e-15);
    CHECK(std::abs(m.det() - 1.0) < 1e-14);

    CHECK_THROWS_AS(jump_propagator(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(jump_propagator(1.0, 2.0, -0.5), std::invalid_argument);
}

TEST_CASE("schedule is the n-fold cycle") {
    const ProtocolConfig cfg = make_cfg(1.3, 0.9, 0.4, 2.25, 3);
    const Symplectic2 c = cycle_propagator(cfg);
    const Symplectic2 ccc = c * (c * c);
    const Symplectic2 m = schedule_propagator(cfg);
    CHECK(m.m11 == ccc.m11);
    CHECK(m.m12 == ccc.m12);
    CHECK(m.m21 == ccc.m21);
    CHECK(m.m22 == ccc.m22);
}

TEST_CASE("evolved vacuum worked example") {
    // quarter period at the doubled frequency: diag(1/8, 2)
    const GaussianState s = evolve_vacuum(make_cfg(1.0, 1.0, 1.0, pi / 4, 1));
    CHECK(std::abs(s.sxx - 0.125) < 1e-12);
    CHECK(std::abs(s.sxy) < 1e-12);
    CHECK(std::abs(s.syy - 2.0) < 1e-12);
}

TEST_CASE("symplecticity and purity hold along random schedules") {
    std::mt19937 rng(7101);
    std::uniform_real_distribution<double> uw(0.2, 5.0), ud(-0.4, 4.0),
        ua(0.0, 1.0), ut(0.1, 10.0);
    std::uniform_int_distribution<int> un(1, 6);
    for (int i = 0; i < 200; ++i) {
        const double w0 = uw(rng);
        double d = ud(rng);
        if (w0 + d <= 0.05) d = 0.05 - w0 + 0.1;
        const ProtocolConfig cfg = make_cfg(w0, d, ua(rng), ut(rng), un(rng));
        // det is a difference of products ~ e^{4r}; honest tolerance is
        // relative to that scale, not absolute.
        const Symplectic2 m = schedule_propagator(cfg);
        const double mscale =
            1.0 + std::abs(m.m11 * m.m22) + std::abs(m.m12 * m.m21);
        CHECK(std::abs(m.det() - 1.0) < 1e-13 * mscale);
        const GaussianState s = evolve_vacuum(cfg);
        const double sscale = 1.0 + std::abs(s.sxx * s.syy) + s.sxy * s.sxy;
        CHECK(std::abs(s.det() - 0.25) < 1e-13 * sscale);
    }
}

TEST_CASE("congruence with the identity is a no-op") {
    const GaussianState s{0.7, -0.2, 1.9};
    const GaussianState out = congruence(Symplectic2::identity(), s);
    CHECK(out.sxx == s.sxx);
    CHECK(out.sxy == s.sxy);
    CHECK(out.syy == s.syy);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_cfg(0.0, 1, 0.5, 1, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_cfg(1, -1.0, 0.5, 1, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_cfg(1, 1, 1.5, 1, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_cfg(1, 1, 0.5, 0, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_cfg(1, 1, 0.5, 1, 0).validate(), std::invalid_argument);
    CHECK_NOTHROW(make_cfg(1, -0.5, 1.0, 1, 1).validate());
}
