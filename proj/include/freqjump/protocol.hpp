#pragma once

#include <stdexcept>
#include <string>

namespace freqjump {

// Full description of one frequency-jump experiment: an oscillator at
// frequency omega0 is switched to omega1 = omega0 + delta for a total time
// alpha*T, split over n identical jump-then-free cycles of duration T/n.
//
// All covariances downstream are expressed in dimensionless quadratures
// scaled by omega0 (x = sqrt(omega0) q, y = p / sqrt(omega0)), so the vacuum
// covariance is I/2 independent of omega0.
struct ProtocolConfig {
    double omega0{1.0};      // base angular frequency, > 0
    double delta{0.0};       // known shift, omega0 + delta > 0
    double alpha{0.0};       // fraction of T spent at the shifted frequency
    double total_time{1.0};  // protocol duration T > 0
    int n_jumps{1};          // number of identical cycles, >= 1

    double omega1() const { return omega0 + delta; }
    // quadratic-drive strength of the shifted Hamiltonian in the omega0 frame
    double eta0() const {
        return (omega1() * omega1() - omega0 * omega0) / (2.0 * omega0);
    }
    double tau_n() const { return alpha * total_time / n_jumps; }  // jump segment
    double t_n() const { return (1.0 - alpha) * total_time / n_jumps; }  // free segment

    void validate() const {
        if (!(omega0 > 0.0))
            throw std::invalid_argument("ProtocolConfig: omega0 must be > 0");
        if (!(omega0 + delta > 0.0))
            throw std::invalid_argument("ProtocolConfig: omega0 + delta must be > 0");
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw std::invalid_argument("ProtocolConfig: alpha must lie in [0, 1]");
        if (!(total_time > 0.0))
            throw std::invalid_argument("ProtocolConfig: total_time must be > 0");
        if (n_jumps < 1)
            throw std::invalid_argument("ProtocolConfig: n_jumps must be >= 1");
    }
};

}  // namespace freqjump
