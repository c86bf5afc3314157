#include "freqjump/dynamics.hpp"

#include <cmath>

namespace freqjump {

GaussianState congruence(const Symplectic2& m, const GaussianState& s) {
    // rows of m applied to sigma from both sides; sigma symmetric
    const double r1x = m.m11 * s.sxx + m.m12 * s.sxy;
    const double r1y = m.m11 * s.sxy + m.m12 * s.syy;
    const double r2x = m.m21 * s.sxx + m.m22 * s.sxy;
    const double r2y = m.m21 * s.sxy + m.m22 * s.syy;
    return {r1x * m.m11 + r1y * m.m12, r1x * m.m21 + r1y * m.m22,
            r2x * m.m21 + r2y * m.m22};
}

Symplectic2 rotation_propagator(double omega0, double t) {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("rotation_propagator: omega0 must be > 0");
    if (!(t >= 0.0))
        throw std::invalid_argument("rotation_propagator: t must be >= 0");
    const double th = omega0 * t;
    const double c = std::cos(th), s = std::sin(th);
    return {c, s, -s, c};
}

Symplectic2 jump_propagator(double omega0, double omega1, double t) {
    if (!(omega0 > 0.0) || !(omega1 > 0.0))
        throw std::invalid_argument("jump_propagator: frequencies must be > 0");
    if (!(t >= 0.0))
        throw std::invalid_argument("jump_propagator: t must be >= 0");
    const double th = omega1 * t;
    const double c = std::cos(th), s = std::sin(th);
    return {c, (omega0 / omega1) * s, -(omega1 / omega0) * s, c};
}

Symplectic2 cycle_propagator(const ProtocolConfig& cfg) {
    cfg.validate();
    return rotation_propagator(cfg.omega0, cfg.t_n()) *
           jump_propagator(cfg.omega0, cfg.omega1(), cfg.tau_n());
}

Symplectic2 schedule_propagator(const ProtocolConfig& cfg) {
    const Symplectic2 c = cycle_propagator(cfg);
    Symplectic2 m = Symplectic2::identity();
    for (int k = 0; k < cfg.n_jumps; ++k) m = c * m;
    return m;
}

GaussianState evolve_vacuum(const ProtocolConfig& cfg) {
    const Symplectic2 m = schedule_propagator(cfg);
    // M (I/2) M^T
    return {0.5 * (m.m11 * m.m11 + m.m12 * m.m12),
            0.5 * (m.m11 * m.m21 + m.m12 * m.m22),
            0.5 * (m.m21 * m.m21 + m.m22 * m.m22)};
}

}  // namespace freqjump
