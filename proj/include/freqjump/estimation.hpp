#pragma once

#include <functional>

#include "freqjump/dynamics.hpp"
#include "freqjump/squeezing.hpp"

namespace freqjump {

// Settings for finite-difference derivatives with respect to omega0.
struct FdConfig {
    double step_scale{1e-4};         // h = step_scale * max(omega0, 1)
    bool estimate_residual{true};    // re-evaluate at h/2 and compare
    double residual_threshold{1e-7};  // relative; above it the result is flagged
};

struct QfiResult {
    double qfi{0.0};          // G(omega0), units time^2
    double qsnr{0.0};         // Q = omega0^2 * G, dimensionless
    double fd_step{0.0};      // step actually used (0 for closed forms)
    double fd_residual{0.0};  // step-halving estimate, relative
    bool flagged{false};      // residual above threshold
};

struct ComparisonReport {
    double gamma{0.0};         // q_jump / q_free
    double q_jump{0.0};
    double q_free{0.0};
    double nbar_matched{0.0};  // energy given to the free-evolution probe
    ProtocolConfig config;     // inputs echoed for reproducibility
};

// G = -Tr[Om^T (d sigma) Om (d sigma)] with Om = [[0,1],[-1,0]], the
// pure-state Gaussian quantum Fisher information. The derivative is a
// 4th-order central finite difference of the covariance family with step h.
double qfi_covariance_family(const std::function<GaussianState(double)>& family,
                             double x0, double h);

// QFI/QSNR of the jump protocol with respect to omega0. The detuning delta is
// a known constant, so omega1 = omega0 + delta co-varies; alpha, T, n are
// protocol constants; the scaled-quadrature frame is part of the statistical
// model (fixed number basis).
QfiResult qfi_gaussian(const ProtocolConfig& cfg, const FdConfig& fd = {});

// Sanity anchor: the family diag(e^{2r}, e^{-2r})/2 differentiated in r has
// G = 2 for every r.
double qfi_formula_sanity(double r);

// Second anchor: the same family rotated by theta, differentiated in theta,
// has G = 2 sinh^2(2r).
double qfi_rotated_sanity(double r, double theta);

// Free-evolution baseline: G_f = 4 t^2 var_n, Q_f = 4 omega0^2 t^2 var_n.
QfiResult free_evolution_qfi(double omega0, double t, double var_n);

// Resource-matched comparison at equal total time and equal energy: the free
// probe is a coherent state with var_n = nbar equal to the squeezing quanta
// the protocol actually produced. cfg.alpha must already be the optimized
// fraction for (omega0, delta, T, n).
ComparisonReport gamma_ratio(const ProtocolConfig& cfg_at_alpha_opt);

}  // namespace freqjump
