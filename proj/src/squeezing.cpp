#include "freqjump/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace freqjump {

SqueezeParams squeeze_params(double omega0, double omega1, double t) {
    if (!(omega0 > 0.0) || !(omega1 > 0.0))
        throw std::invalid_argument("squeeze_params: frequencies must be > 0");
    if (!(t >= 0.0))
        throw std::invalid_argument("squeeze_params: t must be >= 0");
    const double s = std::sin(omega1 * t);
    const double c = std::cos(omega1 * t);
    const double d = omega1 * omega1 - omega0 * omega0;
    // tanh r = |d s| / sqrt(4 w0^2 w1^2 + s^2 d^2); finite for all t
    const double x = std::abs(d) * std::abs(s) /
                     std::sqrt(4.0 * omega0 * omega0 * omega1 * omega1 + s * s * d * d);
    const double r = std::atanh(x);
    if (r == 0.0) return {0.0, 0.0};
    const double phi = std::atan2(2.0 * omega0 * omega1 * s * c * d,
                                  s * s * d * (omega0 * omega0 + omega1 * omega1));
    return {r, phi};
}

GaussianState squeeze_covariance(const SqueezeParams& sp) {
    if (!(sp.r >= 0.0))
        throw std::invalid_argument("squeeze_covariance: r must be >= 0");
    const double ch = std::cosh(2.0 * sp.r);
    const double sh = std::sinh(2.0 * sp.r);
    const double cp = std::cos(sp.phi), spn = std::sin(sp.phi);
    return {0.5 * (ch - sh * cp), -0.5 * sh * spn, 0.5 * (ch + sh * cp)};
}

SqueezeParams extract_squeeze(const GaussianState& state) {
    if (std::abs(state.det() - 0.25) > 1e-8)
        throw std::invalid_argument("extract_squeeze: covariance is not pure (det != 1/4)");
    // cosh 2r = tr sigma for pure states
    const double tr = std::max(state.sxx + state.syy, 1.0);
    const double r = 0.5 * std::acosh(tr);
    if (r < 1e-14) return {0.0, 0.0};
    const double phi = std::atan2(-2.0 * state.sxy, state.syy - state.sxx);
    return {r, phi};
}

double r_max(double omega0, double delta) {
    if (!(omega0 > 0.0) || !(omega0 + delta > 0.0))
        throw std::invalid_argument("r_max: need omega0 > 0 and omega0 + delta > 0");
    return std::abs(std::log1p(delta / omega0));
}

AlphaMax alpha_max(double omega0, double delta, double total_time) {
    if (!(omega0 > 0.0) || !(omega0 + delta > 0.0))
        throw std::invalid_argument("alpha_max: need omega0 > 0 and omega0 + delta > 0");
    if (!(total_time > 0.0))
        throw std::invalid_argument("alpha_max: total_time must be > 0");
    const double v = (std::numbers::pi / 2.0) / (total_time * (omega0 + delta));
    if (v > 1.0) return {1.0, true};
    return {v, false};
}

ResourceAccount nbar_from_squeeze(const SqueezeParams& sp) {
    if (!(sp.r >= 0.0))
        throw std::invalid_argument("nbar_from_squeeze: r must be >= 0");
    const double sh = std::sinh(sp.r);
    const double nbar = sh * sh;
    return {nbar, 2.0 * nbar * (nbar + 1.0)};
}

double max_squeeze_along(const ProtocolConfig& cfg, int samples_per_segment) {
    cfg.validate();
    if (samples_per_segment < 2)
        throw std::invalid_argument("max_squeeze_along: need at least 2 samples");
    const double tau = cfg.tau_n();
    const double tfree = cfg.t_n();
    Symplectic2 m = Symplectic2::identity();
    double best = 0.0;
    auto probe = [&best](const Symplectic2& p) {
        const GaussianState s = congruence(p, GaussianState::vacuum());
        const double tr = std::max(s.sxx + s.syy, 1.0);
        best = std::max(best, 0.5 * std::acosh(tr));
    };
    for (int k = 0; k < cfg.n_jumps; ++k) {
        for (int i = 1; i <= samples_per_segment; ++i) {
            const double f = static_cast<double>(i) / samples_per_segment;
            probe(jump_propagator(cfg.omega0, cfg.omega1(), tau * f) * m);
        }
        m = jump_propagator(cfg.omega0, cfg.omega1(), tau) * m;
        // free rotation never changes r; probe the segment end only
        m = rotation_propagator(cfg.omega0, tfree) * m;
        probe(m);
    }
    return best;
}

}  // namespace freqjump
