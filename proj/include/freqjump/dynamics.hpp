#pragma once

#include "freqjump/protocol.hpp"

namespace freqjump {

// Real 2x2 symplectic matrix (det = 1) acting on the scaled quadratures.
struct Symplectic2 {
    double m11{1.0}, m12{0.0};
    double m21{0.0}, m22{1.0};

    double det() const { return m11 * m22 - m12 * m21; }
    Symplectic2 transposed() const { return {m11, m21, m12, m22}; }
    static Symplectic2 identity() { return {}; }
};

inline Symplectic2 operator*(const Symplectic2& a, const Symplectic2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// Zero-mean single-mode Gaussian state: symmetric covariance matrix in the
// scaled quadratures. Vacuum is I/2; unitary evolution keeps det = 1/4.
struct GaussianState {
    double sxx{0.5}, sxy{0.0}, syy{0.5};

    double det() const { return sxx * syy - sxy * sxy; }
    static GaussianState vacuum() { return {}; }
};

// m * sigma * m^T
GaussianState congruence(const Symplectic2& m, const GaussianState& s);

// Free evolution for time t: phase-space rotation by omega0*t.
Symplectic2 rotation_propagator(double omega0, double t);

// Evolution at the shifted frequency omega1 for time t, written in the
// omega0-scaled frame (hence the omega0/omega1 off-diagonal weights).
Symplectic2 jump_propagator(double omega0, double omega1, double t);

// One cycle: jump segment (tau_n) followed by free segment (T_n).
Symplectic2 cycle_propagator(const ProtocolConfig& cfg);

// n identical cycles.
Symplectic2 schedule_propagator(const ProtocolConfig& cfg);

// Covariance of the vacuum evolved through the full schedule.
GaussianState evolve_vacuum(const ProtocolConfig& cfg);

}  // namespace freqjump
