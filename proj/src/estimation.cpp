#include "freqjump/estimation.hpp"

#include <algorithm>
#include <cmath>

namespace freqjump {

namespace {

struct Sym2 {
    double xx, xy, yy;
};

// G = -Tr[Om^T A Om A] = -2 det A for symmetric A; keep the literal trace.
double qfi_from_dsigma(const Sym2& a) {
    // Om^T A Om = [[yy, -xy], [-xy, xx]] (the adjugate of A)
    const double t11 = a.yy * a.xx - a.xy * a.xy;
    const double t22 = a.xx * a.yy - a.xy * a.xy;
    return -(t11 + t22);
}

Sym2 fd4_dsigma(const std::function<GaussianState(double)>& f, double x0, double h) {
    const GaussianState a = f(x0 - 2.0 * h), b = f(x0 - h);
    const GaussianState c = f(x0 + h), d = f(x0 + 2.0 * h);
    const double w = 1.0 / (12.0 * h);
    return {(a.sxx - 8.0 * b.sxx + 8.0 * c.sxx - d.sxx) * w,
            (a.sxy - 8.0 * b.sxy + 8.0 * c.sxy - d.sxy) * w,
            (a.syy - 8.0 * b.syy + 8.0 * c.syy - d.syy) * w};
}

// tiny negatives are finite-difference roundoff; anything larger is reported
double clamp_nonneg(double g, bool& flagged) {
    if (g < 0.0) {
        if (g > -1e-12) return 0.0;
        flagged = true;
    }
    return g;
}

}  // namespace

double qfi_covariance_family(const std::function<GaussianState(double)>& family,
                             double x0, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("qfi_covariance_family: step must be > 0");
    return qfi_from_dsigma(fd4_dsigma(family, x0, h));
}

QfiResult qfi_gaussian(const ProtocolConfig& cfg, const FdConfig& fd) {
    cfg.validate();
    if (!(fd.step_scale > 0.0))
        throw std::invalid_argument("qfi_gaussian: step_scale must be > 0");
    double h = fd.step_scale * std::max(cfg.omega0, 1.0);
    while (cfg.omega0 - 2.0 * h <= 0.0) h *= 0.5;  // keep the stencil in-domain
    const auto family = [&cfg](double w) {
        ProtocolConfig c = cfg;
        c.omega0 = w;  // delta fixed: omega1 co-varies
        return evolve_vacuum(c);
    };
    QfiResult out;
    out.fd_step = h;
    if (cfg.delta == 0.0 || cfg.alpha == 0.0) {
        // no jump segment (alpha = 0) or a jump at the unshifted frequency
        // (delta = 0): the schedule is free rotation for every member and the
        // vacuum is rotation invariant, so the family is constant exactly.
        out.qfi = 0.0;
        out.qsnr = 0.0;
        return out;
    }
    double g = qfi_covariance_family(family, cfg.omega0, h);
    if (fd.estimate_residual) {
        const double g2 = qfi_covariance_family(family, cfg.omega0, 0.5 * h);
        const double scale = std::max({std::abs(g), std::abs(g2), 1e-300});
        out.fd_residual = (g == g2) ? 0.0 : std::abs(g - g2) / scale;
        out.flagged = out.fd_residual > fd.residual_threshold;
    }
    g = clamp_nonneg(g, out.flagged);
    out.qfi = g;
    out.qsnr = cfg.omega0 * cfg.omega0 * g;
    return out;
}

double qfi_formula_sanity(double r) {
    const auto family = [](double rr) {
        return GaussianState{0.5 * std::exp(2.0 * rr), 0.0, 0.5 * std::exp(-2.0 * rr)};
    };
    return qfi_covariance_family(family, r, 1e-5);
}

double qfi_rotated_sanity(double r, double theta) {
    const GaussianState d{0.5 * std::exp(2.0 * r), 0.0, 0.5 * std::exp(-2.0 * r)};
    const auto family = [&d](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return congruence(Symplectic2{c, s, -s, c}, d);
    };
    return qfi_covariance_family(family, theta, 1e-5);
}

QfiResult free_evolution_qfi(double omega0, double t, double var_n) {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("free_evolution_qfi: omega0 must be > 0");
    if (!(t >= 0.0) || !(var_n >= 0.0))
        throw std::invalid_argument("free_evolution_qfi: t and var_n must be >= 0");
    QfiResult out;
    out.qfi = 4.0 * t * t * var_n;
    out.qsnr = omega0 * omega0 * out.qfi;
    return out;
}

ComparisonReport gamma_ratio(const ProtocolConfig& cfg_at_alpha_opt) {
    const ProtocolConfig& cfg = cfg_at_alpha_opt;
    cfg.validate();
    const QfiResult jump = qfi_gaussian(cfg);
    const SqueezeParams sp = extract_squeeze(evolve_vacuum(cfg));
    const ResourceAccount res = nbar_from_squeeze(sp);
    if (!(res.nbar > 0.0))
        throw std::runtime_error(
            "gamma_ratio: comparison undefined, matched energy nbar = 0 "
            "(delta = 0 or a revival point)");
    const QfiResult free = free_evolution_qfi(cfg.omega0, cfg.total_time, res.nbar);
    ComparisonReport rep;
    rep.q_jump = jump.qsnr;
    rep.q_free = free.qsnr;
    rep.nbar_matched = res.nbar;
    rep.gamma = jump.qsnr / free.qsnr;
    rep.config = cfg;
    return rep;
}

}  // namespace freqjump
