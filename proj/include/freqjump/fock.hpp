#pragma once
// Independent number-basis route: evolve the vacuum exactly (up to
// truncation) under the piecewise schedule and differentiate the pure
// state. Used to cross-check the covariance-matrix route.

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "freqjump/dynamics.hpp"
#include "freqjump/estimation.hpp"
#include "freqjump/protocol.hpp"
#include "freqjump/squeezing.hpp"

namespace freqjump {

// Amplitudes c_0..c_N on |0>..|N>; only even levels are populated here.
struct FockVector {
    std::vector<std::complex<double>> coeffs;

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    double norm2() const;
    double tail_mass() const;  // population of the top four levels
    double mean_n() const;
    GaussianState second_moments() const;
};

// Smallest even cutoff keeping the squeezed-vacuum tail below tol.
int default_truncation(double r, double tol = 1e-14);

// Squeezed vacuum: c_0 = (cosh r)^{-1/2}, even ladder with ratio
// (-e^{i phi} tanh r) sqrt((2m+1)/(2m+2)), c_0 real positive.
FockVector squeezed_vacuum_coeffs(const SqueezeParams& sp, int truncation);

// Cached eigendecompositions of the even-parity jump Hamiltonian block,
// keyed by (omega0, omega1, truncation). Keys match exactly: a
// finite-difference sweep revisits the same frequencies bit-identically.
// Not safe for concurrent use; omit the workspace for per-call state.
struct FockWorkspace {
    struct Factorization {
        Eigen::VectorXd evals;
        Eigen::MatrixXd evecs;
    };
    std::map<std::array<double, 3>, Factorization> cache;

    const Factorization& factorization(double omega0, double omega1, int truncation);
};

// Vacuum through n cycles of exp(-i H1 tau_n) then exp(-i H0 T_n), with
// H1 = eta0/2 (a^2 + adag^2) + (omega0 + eta0)(n + 1/2) truncated at N.
// Throws on norm leakage > 1e-10 or tail mass > 1e-8.
FockVector evolve_fock(const ProtocolConfig& cfg, int truncation,
                       FockWorkspace* ws = nullptr);

// Rotate the global phase so coeffs[0] is real and nonnegative — the
// smooth gauge that makes number-basis finite differences well defined.
FockVector gauge_fix(FockVector psi);

// G = 4 (Re<dpsi|dpsi> - |<psi|dpsi>|^2), dpsi by a 4th-order central
// stencil. The family must be gauge-smooth in x (see gauge_fix).
double qfi_pure_family(const std::function<FockVector(double)>& family,
                       double x0, double h);

// Number-basis QFI of the schedule w.r.t. omega0 (delta held fixed).
// truncation <= 0 sizes the basis from the peak squeezing along the
// schedule. Step rule matches qfi_gaussian.
QfiResult qfi_pure(const ProtocolConfig& cfg, const FdConfig& fd = {},
                   int truncation = -1, FockWorkspace* ws = nullptr);

}  // namespace freqjump
