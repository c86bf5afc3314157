#include "freqjump/fock.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace freqjump {

namespace {

using cd = std::complex<double>;

void require_even_truncation(int n, const char* who) {
    if (n < 2 || n % 2 != 0) {
        std::ostringstream msg;
        msg << who << ": truncation must be even and >= 2, got " << n;
        throw std::invalid_argument(msg.str());
    }
}

// complex matvec through a real orthogonal matrix, two real products
Eigen::VectorXcd apply_real(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v) {
    const Eigen::VectorXd re = m * v.real();
    const Eigen::VectorXd im = m * v.imag();
    Eigen::VectorXcd out(v.size());
    out.real() = re;
    out.imag() = im;
    return out;
}

}  // namespace

double FockVector::norm2() const {
    double s = 0.0;
    for (const cd& c : coeffs) s += std::norm(c);
    return s;
}

double FockVector::tail_mass() const {
    const int n = static_cast<int>(coeffs.size());
    double s = 0.0;
    for (int k = std::max(0, n - 4); k < n; ++k) s += std::norm(coeffs[k]);
    return s;
}

double FockVector::mean_n() const {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += static_cast<double>(k) * std::norm(coeffs[k]);
    return s;
}

GaussianState FockVector::second_moments() const {
    const double nbar = mean_n();
    cd a2{0.0, 0.0};
    for (std::size_t k = 0; k + 2 < coeffs.size(); ++k)
        a2 += std::conj(coeffs[k]) * coeffs[k + 2] *
              std::sqrt(static_cast<double>(k + 1) * static_cast<double>(k + 2));
    return {a2.real() + nbar + 0.5, a2.imag(), -a2.real() + nbar + 0.5};
}

int default_truncation(double r, double tol) {
    const double t = std::tanh(std::abs(r));
    if (t < 1e-12) return 64;
    const double ch = std::cosh(r);
    int m = 8;
    for (;;) {
        const double bound =
            std::pow(t, 2 * m) / ((1.0 - t * t) * std::sqrt(std::numbers::pi * m) * ch);
        if (bound < tol) return std::max(64, 2 * m);
        m += 2;
    }
}

FockVector squeezed_vacuum_coeffs(const SqueezeParams& sp, int truncation) {
    require_even_truncation(truncation, "squeezed_vacuum_coeffs");
    FockVector psi;
    psi.coeffs.assign(truncation + 1, cd{0.0, 0.0});
    const double th = std::tanh(sp.r);
    const cd step = -std::exp(cd{0.0, sp.phi}) * th;
    cd c{1.0 / std::sqrt(std::cosh(sp.r)), 0.0};
    psi.coeffs[0] = c;
    for (int m = 0; 2 * (m + 1) <= truncation; ++m) {
        c *= step * std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
        psi.coeffs[2 * (m + 1)] = c;
    }
    const double deficit = 1.0 - psi.norm2();
    if (deficit > 1e-12) {
        std::ostringstream msg;
        msg << "squeezed_vacuum_coeffs: truncation " << truncation << " leaves tail mass "
            << deficit << " for r = " << sp.r << "; need at least "
            << default_truncation(sp.r);
        throw std::runtime_error(msg.str());
    }
    return psi;
}

const FockWorkspace::Factorization& FockWorkspace::factorization(double omega0,
                                                                 double omega1,
                                                                 int truncation) {
    const std::array<double, 3> key{omega0, omega1, static_cast<double>(truncation)};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // even block: row i holds level 2i, coupling 2i <-> 2i+2
    const int dim = truncation / 2 + 1;
    const double eta0 = (omega1 * omega1 - omega0 * omega0) / (2.0 * omega0);
    Eigen::VectorXd diag(dim), off(dim - 1);
    for (int i = 0; i < dim; ++i) diag[i] = (omega0 + eta0) * (2.0 * i + 0.5);
    for (int i = 0; i + 1 < dim; ++i)
        off[i] = 0.5 * eta0 * std::sqrt((2.0 * i + 1.0) * (2.0 * i + 2.0));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("FockWorkspace: eigendecomposition failed");
    return cache.emplace(key, Factorization{es.eigenvalues(), es.eigenvectors()})
        .first->second;
}

FockVector evolve_fock(const ProtocolConfig& cfg, int truncation, FockWorkspace* ws) {
    cfg.validate();
    require_even_truncation(truncation, "evolve_fock");
    FockWorkspace local;
    FockWorkspace& w = ws ? *ws : local;
    const auto& fac = w.factorization(cfg.omega0, cfg.omega1(), truncation);

    const int dim = truncation / 2 + 1;
    const double tau = cfg.tau_n();
    const double tfree = cfg.t_n();
    Eigen::ArrayXcd jump_ph(dim), free_ph(dim);
    for (int i = 0; i < dim; ++i) {
        jump_ph[i] = std::exp(cd{0.0, -fac.evals[i] * tau});
        free_ph[i] = std::exp(cd{0.0, -cfg.omega0 * (2.0 * i + 0.5) * tfree});
    }

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi[0] = 1.0;
    for (int c = 0; c < cfg.n_jumps; ++c) {
        psi = apply_real(fac.evecs.transpose(), psi);
        psi.array() *= jump_ph;
        psi = apply_real(fac.evecs, psi);
        psi.array() *= free_ph;
    }

    FockVector out;
    out.coeffs.assign(truncation + 1, cd{0.0, 0.0});
    for (int i = 0; i < dim; ++i) out.coeffs[2 * i] = psi[i];

    const double leak = std::abs(1.0 - out.norm2());
    if (leak > 1e-10) {
        std::ostringstream msg;
        msg << "evolve_fock: norm leakage " << leak << " at truncation " << truncation;
        throw std::runtime_error(msg.str());
    }
    const double tail = out.tail_mass();
    if (tail > 1e-8) {
        std::ostringstream msg;
        msg << "evolve_fock: tail mass " << tail << " at truncation " << truncation
            << "; increase the truncation";
        throw std::runtime_error(msg.str());
    }
    return out;
}

FockVector gauge_fix(FockVector psi) {
    if (psi.coeffs.empty()) return psi;
    const double ang = std::arg(psi.coeffs[0]);
    if (ang == 0.0) return psi;
    const cd ph = std::exp(cd{0.0, -ang});
    for (std::size_t k = 1; k < psi.coeffs.size(); ++k) psi.coeffs[k] *= ph;
    psi.coeffs[0] = std::abs(psi.coeffs[0]);  // exactly real by construction
    return psi;
}

double qfi_pure_family(const std::function<FockVector(double)>& family, double x0,
                       double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("qfi_pure_family: step must be > 0");
    const FockVector psi = family(x0);
    const FockVector a = family(x0 - 2.0 * h), b = family(x0 - h);
    const FockVector c = family(x0 + h), d = family(x0 + 2.0 * h);
    const std::size_t n = psi.coeffs.size();
    if (a.coeffs.size() != n || b.coeffs.size() != n || c.coeffs.size() != n ||
        d.coeffs.size() != n)
        throw std::invalid_argument("qfi_pure_family: stencil states differ in size");
    const double wgt = 1.0 / (12.0 * h);
    double dd = 0.0;
    cd overlap{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const cd dk = (a.coeffs[k] - 8.0 * b.coeffs[k] + 8.0 * c.coeffs[k] - d.coeffs[k]) * wgt;
        dd += std::norm(dk);
        overlap += std::conj(psi.coeffs[k]) * dk;
    }
    return 4.0 * (dd - std::norm(overlap));
}

QfiResult qfi_pure(const ProtocolConfig& cfg, const FdConfig& fd, int truncation,
                   FockWorkspace* ws) {
    cfg.validate();
    if (!(fd.step_scale > 0.0))
        throw std::invalid_argument("qfi_pure: step_scale must be > 0");
    int n = truncation;
    if (n <= 0) n = default_truncation(max_squeeze_along(cfg));
    FockWorkspace local;
    FockWorkspace* w = ws ? ws : &local;

    double h = fd.step_scale * std::max(cfg.omega0, 1.0);
    while (cfg.omega0 - 2.0 * h <= 0.0) h *= 0.5;
    const auto family = [&cfg, n, w](double wv) {
        ProtocolConfig c = cfg;
        c.omega0 = wv;  // delta fixed: omega1 co-varies
        return gauge_fix(evolve_fock(c, n, w));
    };

    QfiResult out;
    out.fd_step = h;
    double g = qfi_pure_family(family, cfg.omega0, h);
    if (fd.estimate_residual) {
        const double g2 = qfi_pure_family(family, cfg.omega0, 0.5 * h);
        const double scale = std::max({std::abs(g), std::abs(g2), 1e-300});
        out.fd_residual = (g == g2) ? 0.0 : std::abs(g - g2) / scale;
        out.flagged = out.fd_residual > fd.residual_threshold;
    }
    if (g < 0.0) {
        if (g > -1e-12) g = 0.0;
        else out.flagged = true;
    }
    out.qfi = g;
    out.qsnr = cfg.omega0 * cfg.omega0 * g;
    return out;
}

}  // namespace freqjump
