#pragma once
// Squeezing-fraction optimization, multi-jump ratios, and scaling fits.

#include <optional>
#include <vector>

#include "freqjump/estimation.hpp"
#include "freqjump/protocol.hpp"

namespace freqjump {

struct OptimizationResult {
    double alpha_opt{0.0};
    double q_opt{0.0};
    // analytic quarter-period marker (pi/2)/(T omega1), deliberately
    // unclamped so the approach of alpha_opt can be read off directly
    double alpha_max_marker{0.0};
    bool boundary{false};    // alpha_opt pinned to 0 or 1
    bool degenerate{false};  // delta = 0, Q identically zero
    int n_jumps{1};
    std::optional<double> ratio_rho{};  // rho_n fills this
};

struct ScanPoint {
    double alpha{0.0};
    double qfi{0.0};
    double qsnr{0.0};
    bool flagged{false};
};

// Uniform inclusive grid on [0,1]; alpha in base is ignored. Trouble at a
// grid point flags that point instead of aborting the scan.
std::vector<ScanPoint> scan_alpha(const ProtocolConfig& base, int grid_size = 201,
                                  const FdConfig& fd = {});

// Coarse scan (>= 512 points, widened with (omega0+delta)*T so peaks
// ~1/omega1 apart stay resolved), then golden-section refinement of the
// best bracket. Ties break toward the smallest alpha.
OptimizationResult optimize_alpha(const ProtocolConfig& base);

// Q_n at its own optimum over Q_1 at its own optimum; ratio_rho set.
// rho_1 = 1 exactly. delta = 0 throws.
OptimizationResult rho_n(double omega0, double delta, double total_time, int n_jumps);

struct ScalingFit {
    double slope{0.0};
    int n_used{0};
    int n_excluded{0};
};

// Least-squares slope of log q vs log x; nonpositive samples are dropped.
// Needs at least 8 input pairs.
ScalingFit scaling_fit(const std::vector<double>& xs, const std::vector<double>& qs);

}  // namespace freqjump
