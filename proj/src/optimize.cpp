#include "freqjump/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace freqjump {

namespace {

FdConfig fast_fd() {
    FdConfig fd;
    fd.estimate_residual = false;
    return fd;
}

}  // namespace

std::vector<ScanPoint> scan_alpha(const ProtocolConfig& base, int grid_size,
                                  const FdConfig& fd) {
    if (grid_size < 64)
        throw std::invalid_argument("scan_alpha: grid_size must be >= 64");
    ProtocolConfig cfg = base;
    cfg.alpha = 0.0;
    cfg.validate();
    std::vector<ScanPoint> curve;
    curve.reserve(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        ScanPoint pt;
        pt.alpha = static_cast<double>(i) / (grid_size - 1);
        cfg.alpha = pt.alpha;
        try {
            const QfiResult q = qfi_gaussian(cfg, fd);
            pt.qfi = q.qfi;
            pt.qsnr = q.qsnr;
            pt.flagged = q.flagged;
        } catch (const std::exception&) {
            pt.qfi = std::numeric_limits<double>::quiet_NaN();
            pt.qsnr = std::numeric_limits<double>::quiet_NaN();
            pt.flagged = true;
        }
        curve.push_back(pt);
    }
    return curve;
}

OptimizationResult optimize_alpha(const ProtocolConfig& base) {
    ProtocolConfig cfg = base;
    cfg.alpha = 0.0;
    cfg.validate();

    OptimizationResult out;
    out.n_jumps = cfg.n_jumps;
    out.alpha_max_marker =
        (std::numbers::pi / 2.0) / (cfg.total_time * cfg.omega1());
    if (cfg.delta == 0.0) {
        out.degenerate = true;
        out.boundary = true;
        return out;  // Q is identically zero; alpha_opt = 0 by the tie rule
    }

    const FdConfig fd = fast_fd();
    const auto q = [&cfg, &fd](double a) {
        ProtocolConfig c = cfg;
        c.alpha = a;
        return qfi_gaussian(c, fd).qsnr;
    };

    // coarse pass, widened so peaks spaced ~1/omega1 are resolved
    const int npts = std::max(
        512, 16 * static_cast<int>(std::ceil(cfg.omega1() * cfg.total_time)));
    std::vector<double> qs(npts + 1);
    int ibest = 0;
    for (int i = 0; i <= npts; ++i) {
        qs[i] = q(static_cast<double>(i) / npts);
        if (qs[i] > qs[ibest]) ibest = i;
    }

    // golden-section refinement of the bracket around the best point
    double a = static_cast<double>(std::max(ibest - 1, 0)) / npts;
    double b = static_cast<double>(std::min(ibest + 1, npts)) / npts;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = -q(c), fdv = -q(d);
    while (b - a > 1e-9) {
        if (fc < fdv) {
            b = d;
            d = c;
            fdv = fc;
            c = b - gr * (b - a);
            fc = -q(c);
        } else {
            a = c;
            c = d;
            fc = fdv;
            d = a + gr * (b - a);
            fdv = -q(d);
        }
    }
    double aopt = 0.5 * (a + b);
    double qopt = q(aopt);
    const double acoarse = static_cast<double>(ibest) / npts;
    if (qs[ibest] > qopt || (qs[ibest] == qopt && acoarse < aopt)) {
        aopt = acoarse;
        qopt = qs[ibest];
    }

    out.alpha_opt = aopt;
    out.q_opt = qopt;
    out.boundary = aopt < 1e-9 || aopt > 1.0 - 1e-9;
    return out;
}

OptimizationResult rho_n(double omega0, double delta, double total_time, int n_jumps) {
    if (delta == 0.0)
        throw std::invalid_argument("rho_n: degenerate at delta = 0");
    ProtocolConfig cfg;
    cfg.omega0 = omega0;
    cfg.delta = delta;
    cfg.total_time = total_time;
    cfg.n_jumps = n_jumps;
    OptimizationResult out = optimize_alpha(cfg);
    if (n_jumps == 1) {
        out.ratio_rho = 1.0;
        return out;
    }
    cfg.n_jumps = 1;
    const OptimizationResult ref = optimize_alpha(cfg);
    out.ratio_rho = out.q_opt / ref.q_opt;
    return out;
}

ScalingFit scaling_fit(const std::vector<double>& xs, const std::vector<double>& qs) {
    if (xs.size() != qs.size())
        throw std::invalid_argument("scaling_fit: mismatched sample arrays");
    if (xs.size() < 8)
        throw std::invalid_argument("scaling_fit: need at least 8 samples");
    std::vector<double> lx, lq;
    ScalingFit fit;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] > 0.0 && qs[i] > 0.0) {
            lx.push_back(std::log(xs[i]));
            lq.push_back(std::log(qs[i]));
        } else {
            ++fit.n_excluded;
        }
    }
    fit.n_used = static_cast<int>(lx.size());
    if (fit.n_used < 2)
        throw std::invalid_argument("scaling_fit: fewer than 2 usable samples");
    double mx = 0.0, mq = 0.0;
    for (int i = 0; i < fit.n_used; ++i) {
        mx += lx[i];
        mq += lq[i];
    }
    mx /= fit.n_used;
    mq /= fit.n_used;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < fit.n_used; ++i) {
        num += (lx[i] - mx) * (lq[i] - mq);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    if (den == 0.0)
        throw std::invalid_argument("scaling_fit: degenerate abscissa");
    fit.slope = num / den;
    return fit;
}

}  // namespace freqjump
