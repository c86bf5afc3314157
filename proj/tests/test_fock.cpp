#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "freqjump/estimation.hpp"
#include "freqjump/fock.hpp"

using namespace freqjump;

namespace {
constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

ProtocolConfig make_cfg(double w0, double d, double a, double T, int n) {
    ProtocolConfig c;
    c.omega0 = w0;
    c.delta = d;
    c.alpha = a;
    c.total_time = T;
    c.n_jumps = n;
    return c;
}

double relerr(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

int sized_for(const ProtocolConfig& cfg) {
    return default_truncation(max_squeeze_along(cfg));
}
}  // namespace

TEST_CASE("default truncation is adequate by construction") {
    CHECK(default_truncation(0.0) == 64);
    for (double r : {0.5, 1.0, 2.0, 2.5}) {
        const int n = default_truncation(r);
        CHECK(n >= 64);
        CHECK(n % 2 == 0);
        SqueezeParams sp;
        sp.r = r;
        const FockVector psi = squeezed_vacuum_coeffs(sp, n);
        CHECK(std::abs(1.0 - psi.norm2()) < 1e-12);
        CHECK(psi.tail_mass() < 1e-12);
    }
}

TEST_CASE("unsqueezed vacuum is the vacuum") {
    const FockVector psi = squeezed_vacuum_coeffs(SqueezeParams{}, 64);
    CHECK(psi.coeffs[0] == cd{1.0, 0.0});
    for (int k = 1; k <= psi.truncation(); ++k) CHECK(psi.coeffs[k] == cd{0.0, 0.0});
}

TEST_CASE("squeezed vacuum energy") {
    SqueezeParams sp;
    sp.r = std::log(2.0);
    const FockVector psi = squeezed_vacuum_coeffs(sp, 128);
    CHECK(std::abs(psi.mean_n() - 9.0 / 16.0) < 1e-9);
    CHECK(std::abs(psi.norm2() - 1.0) < 1e-12);
}

TEST_CASE("number-basis moments reproduce the covariance") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ur(0.0, 2.0), up(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        SqueezeParams sp;
        sp.r = ur(rng);
        sp.phi = up(rng);
        const FockVector psi = squeezed_vacuum_coeffs(sp, default_truncation(sp.r));
        const GaussianState a = psi.second_moments();
        const GaussianState b = squeeze_covariance(sp);
        CHECK(std::abs(a.sxx - b.sxx) < 1e-9 * std::max(1.0, b.sxx));
        CHECK(std::abs(a.sxy - b.sxy) < 1e-9 * std::max(1.0, std::abs(b.sxy)));
        CHECK(std::abs(a.syy - b.syy) < 1e-9 * std::max(1.0, b.syy));
    }
}

TEST_CASE("odd amplitudes are exactly zero") {
    SqueezeParams sp;
    sp.r = 1.1;
    sp.phi = 0.7;
    const FockVector a = squeezed_vacuum_coeffs(sp, 256);
    for (int k = 1; k <= a.truncation(); k += 2) CHECK(a.coeffs[k] == cd{0.0, 0.0});
    const FockVector b = evolve_fock(make_cfg(1, 1, 0.5, 1, 1), 128);
    for (int k = 1; k <= b.truncation(); k += 2) CHECK(b.coeffs[k] == cd{0.0, 0.0});
}

TEST_CASE("insufficient truncation is an error") {
    SqueezeParams sp;
    sp.r = 3.0;
    CHECK_THROWS_AS(squeezed_vacuum_coeffs(sp, 64), std::runtime_error);
    CHECK_THROWS_AS(squeezed_vacuum_coeffs(sp, 63), std::invalid_argument);
    // strong squeeze into a basis that is far too small
    CHECK_THROWS_AS(evolve_fock(make_cfg(0.5, 2.0, 1.0, 3, 3), 64),
                    std::runtime_error);
}

TEST_CASE("trivial evolution stays in the vacuum") {
    const FockVector psi = evolve_fock(make_cfg(1, 0, 0.5, 2, 2), 64);
    CHECK(std::abs(std::abs(psi.coeffs[0]) - 1.0) < 1e-12);
    CHECK(psi.mean_n() < 1e-20);
}

TEST_CASE("evolved moments match the symplectic route") {
    // quarter period at the doubled frequency: diag(1/8, 2)
    const FockVector psi = evolve_fock(make_cfg(1, 1, 1.0, pi / 4, 1), 128);
    const GaussianState s = psi.second_moments();
    CHECK(std::abs(s.sxx - 0.125) < 1e-8);
    CHECK(std::abs(s.sxy) < 1e-8);
    CHECK(std::abs(s.syy - 2.0) < 1e-8);

    for (const ProtocolConfig& cfg :
         {make_cfg(1, 0.5, 0.3, 1, 1), make_cfg(2, 1, 0.8, 1, 2),
          make_cfg(1, 1, 0.3, 3, 2), make_cfg(0.5, 1, 0.8, 1, 3)}) {
        const GaussianState a = evolve_fock(cfg, sized_for(cfg)).second_moments();
        const GaussianState b = evolve_vacuum(cfg);
        CHECK(std::abs(a.sxx - b.sxx) < 1e-8 * std::max(1.0, b.sxx));
        CHECK(std::abs(a.sxy - b.sxy) < 1e-8 * std::max(1.0, std::abs(b.sxy)));
        CHECK(std::abs(a.syy - b.syy) < 1e-8 * std::max(1.0, b.syy));
    }
}

TEST_CASE("both constructions give the same physical state") {
    for (const ProtocolConfig& cfg :
         {make_cfg(1, 1, 0.5, 1, 1), make_cfg(2, 0.5, 0.8, 1, 2),
          make_cfg(1, 2, 0.3, 3, 3)}) {
        const int n = sized_for(cfg);
        const FockVector a = gauge_fix(evolve_fock(cfg, n));
        const SqueezeParams sp = extract_squeeze(evolve_vacuum(cfg));
        const FockVector b = squeezed_vacuum_coeffs(sp, n);
        cd ov{0.0, 0.0};
        for (std::size_t k = 0; k < a.coeffs.size(); ++k)
            ov += std::conj(a.coeffs[k]) * b.coeffs[k];
        CHECK(std::abs(std::abs(ov) - 1.0) < 1e-8);
        // energy bookkeeping closes the loop
        const double sh = std::sinh(sp.r);
        CHECK(std::abs(a.mean_n() - sh * sh) < 1e-8 * std::max(1.0, sh * sh));
    }
}

TEST_CASE("gauge fix and gauge invariance of the pure-state QFI") {
    const FockVector raw = evolve_fock(make_cfg(1, 1, 0.5, 1, 1), 128);
    const FockVector fixed = gauge_fix(raw);
    CHECK(fixed.coeffs[0].imag() == 0.0);
    CHECK(fixed.coeffs[0].real() > 0.0);

    const auto plain = [](double w) {
        ProtocolConfig c = make_cfg(1, 1, 0.5, 1, 1);
        c.omega0 = w;
        return gauge_fix(evolve_fock(c, 128));
    };
    const auto rephased = [&plain](double w) {
        FockVector psi = plain(w);
        const cd ph = std::exp(cd{0.0, 0.7 * w});
        for (cd& c : psi.coeffs) c *= ph;
        return psi;
    };
    const double g1 = qfi_pure_family(plain, 1.0, 1e-4);
    const double g2 = qfi_pure_family(rephased, 1.0, 1e-4);
    CHECK(relerr(g1, g2) < 1e-9);
}

TEST_CASE("squeezed-family anchor in the number basis") {
    const auto family = [](double r) {
        SqueezeParams sp;
        sp.r = r;
        return squeezed_vacuum_coeffs(sp, 128);
    };
    CHECK(std::abs(qfi_pure_family(family, 0.7, 1e-5) - 2.0) < 2e-9);
}

TEST_CASE("the two QFI routes agree at the pinned point") {
    const ProtocolConfig cfg = make_cfg(1, 1, 0.5, 1, 1);
    const QfiResult f = qfi_pure(cfg);
    const QfiResult g = qfi_gaussian(cfg);
    CHECK(relerr(f.qfi, g.qfi) < 1e-6);
    CHECK(relerr(f.qfi, 2.105148265482589) < 1e-6);
    CHECK_FALSE(f.flagged);
}

TEST_CASE("no information without a jump, number-basis route") {
    const QfiResult q = qfi_pure(make_cfg(1, 0, 0.5, 1, 1), FdConfig{}, 64);
    CHECK(q.qfi == 0.0);
}

TEST_CASE("truncation stability") {
    const ProtocolConfig cfg = make_cfg(1, 1, 0.5, 1, 1);
    const double a = qfi_pure(cfg, FdConfig{}, 128).qfi;
    const double b = qfi_pure(cfg, FdConfig{}, 256).qfi;
    CHECK(relerr(a, b) < 1e-8);
}

TEST_CASE("workspace reuse changes nothing") {
    const ProtocolConfig cfg = make_cfg(1, 1, 0.5, 1, 1);
    FockWorkspace ws;
    const double a = qfi_pure(cfg, FdConfig{}, 128, &ws).qfi;
    CHECK_FALSE(ws.cache.empty());
    const double b = qfi_pure(cfg, FdConfig{}, 128, &ws).qfi;
    const double c = qfi_pure(cfg, FdConfig{}, 128).qfi;
    CHECK(a == b);
    CHECK(a == c);
}
