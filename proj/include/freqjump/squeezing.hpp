#pragma once

#include "freqjump/dynamics.hpp"

namespace freqjump {

// Squeezed-vacuum parametrization of a pure zero-mean Gaussian state:
// amplitude r >= 0, phase phi in (-pi, pi] (phi = 0 by convention at r = 0).
// Covariance eigenvalues are exp(±2r)/2.
struct SqueezeParams {
    double r{0.0};
    double phi{0.0};
};

// Energy bookkeeping of a squeezed vacuum: nbar = sinh^2 r quanta,
// number variance var_n = 2 nbar (nbar + 1).
struct ResourceAccount {
    double nbar{0.0};
    double var_n{0.0};
};

struct AlphaMax {
    double value{0.0};
    bool clamped{false};
};

// Closed-form squeezing amplitude and phase generated by a single jump
// segment of duration t (omega0 -> omega1), in a form regular at
// sin(omega1 t) -> 0.
SqueezeParams squeeze_params(double omega0, double omega1, double t);

// Covariance of the squeezed vacuum with the given parameters.
GaussianState squeeze_covariance(const SqueezeParams& sp);

// Inverse of squeeze_covariance for pure states (det sigma = 1/4).
SqueezeParams extract_squeeze(const GaussianState& state);

// Largest amplitude a single jump segment can reach: |ln(1 + delta/omega0)|.
double r_max(double omega0, double delta);

// Time fraction that maximizes the squeezing amplitude for a single jump,
// (pi/2) / (T * omega1), clamped to [0, 1] with a flag.
AlphaMax alpha_max(double omega0, double delta, double total_time);

ResourceAccount nbar_from_squeeze(const SqueezeParams& sp);

// Maximum squeezing amplitude attained anywhere along the protocol,
// sampled inside every segment; sizes Fock-space truncations.
double max_squeeze_along(const ProtocolConfig& cfg, int samples_per_segment = 160);

}  // namespace freqjump
