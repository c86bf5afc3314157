#include "freqjump/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "freqjump/estimation.hpp"
#include "freqjump/fock.hpp"
#include "freqjump/optimize.hpp"
#include "freqjump/squeezing.hpp"
#include "freqjump/version.hpp"

namespace freqjump {

namespace {

std::string join(const std::vector<double>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += csv_double(vs[i]);
    }
    return s;
}

std::string join(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s;
}

void meta_line(std::ostream& out, const std::string& cmd, const std::string& echo) {
    out << "# freqjump " << FREQJUMP_VERSION << " | " << cmd << " | " << echo << '\n';
}

void require_nonempty(const char* cmd, bool ok) {
    if (!ok) {
        std::ostringstream msg;
        msg << cmd << ": empty parameter range";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunSummary run_sweep_alpha(const SweepAlphaParams& p, std::ostream& out) {
    require_nonempty("sweep-alpha", !p.omega0s.empty() && !p.deltas.empty() &&
                                        !p.times.empty() && !p.ns.empty());
    std::ostringstream echo;
    echo << "omega0=" << join(p.omega0s) << " delta=" << join(p.deltas)
         << " T=" << join(p.times) << " n=" << join(p.ns)
         << " grid=" << p.grid_size;
    meta_line(out, "sweep-alpha", echo.str());
    out << "omega0,delta,T,n,alpha,qfi,qsnr,warn\n";
    long rows = 0, warned = 0;
    for (double w0 : p.omega0s)
        for (double d : p.deltas)
            for (double T : p.times)
                for (int n : p.ns) {
                    ProtocolConfig cfg;
                    cfg.omega0 = w0;
                    cfg.delta = d;
                    cfg.total_time = T;
                    cfg.n_jumps = n;
                    for (const ScanPoint& pt : scan_alpha(cfg, p.grid_size)) {
                        out << csv_double(w0) << ',' << csv_double(d) << ','
                            << csv_double(T) << ',' << n << ','
                            << csv_double(pt.alpha) << ',' << csv_double(pt.qfi)
                            << ',' << csv_double(pt.qsnr) << ','
                            << (pt.flagged ? 1 : 0) << '\n';
                        ++rows;
                        if (pt.flagged) ++warned;
                    }
                }
    RunSummary s;
    std::ostringstream t;
    t << "sweep-alpha: " << rows << " rows, " << warned << " flagged";
    s.text = t.str();
    return s;
}

RunSummary run_optimize(const OptimizeParams& p, std::ostream& out) {
    require_nonempty("optimize", !p.omega0s.empty() && !p.deltas.empty() &&
                                     !p.times.empty() && !p.ns.empty());
    std::ostringstream echo;
    echo << "omega0=" << join(p.omega0s) << " delta=" << join(p.deltas)
         << " T=" << join(p.times) << " n=" << join(p.ns);
    meta_line(out, "optimize", echo.str());
    out << "omega0,delta,T,n,alpha_opt,alpha_max,q_opt,boundary\n";
    long rows = 0, interior = 0;
    for (double w0 : p.omega0s)
        for (double d : p.deltas)
            for (double T : p.times)
                for (int n : p.ns) {
                    ProtocolConfig cfg;
                    cfg.omega0 = w0;
                    cfg.delta = d;
                    cfg.total_time = T;
                    cfg.n_jumps = n;
                    const OptimizationResult r = optimize_alpha(cfg);
                    out << csv_double(w0) << ',' << csv_double(d) << ','
                        << csv_double(T) << ',' << n << ','
                        << csv_double(r.alpha_opt) << ','
                        << csv_double(r.alpha_max_marker) << ','
                        << csv_double(r.q_opt) << ',' << (r.boundary ? 1 : 0)
                        << '\n';
                    ++rows;
                    if (!r.boundary) ++interior;
                }
    RunSummary s;
    std::ostringstream t;
    t << "optimize: " << rows << " rows, " << interior << " interior optima";
    s.text = t.str();
    return s;
}

RunSummary run_compare_free(const CompareFreeParams& p, std::ostream& out) {
    require_nonempty("compare-free",
                     !p.omega0s.empty() && !p.deltas.empty() && !p.times.empty());
    std::ostringstream echo;
    echo << "omega0=" << join(p.omega0s) << " delta=" << join(p.deltas)
         << " T=" << join(p.times);
    meta_line(out, "compare-free", echo.str());
    out << "omega0,delta,T,alpha_opt,nbar,q_jump,q_free,gamma\n";
    long rows = 0, wins = 0;
    double min_gamma = 0.0;
    bool first = true;
    for (double w0 : p.omega0s)
        for (double d : p.deltas)
            for (double T : p.times) {
                ProtocolConfig cfg;
                cfg.omega0 = w0;
                cfg.delta = d;
                cfg.total_time = T;
                const OptimizationResult r = optimize_alpha(cfg);
                cfg.alpha = r.alpha_opt;
                const ComparisonReport rep = gamma_ratio(cfg);
                out << csv_double(w0) << ',' << csv_double(d) << ','
                    << csv_double(T) << ',' << csv_double(r.alpha_opt) << ','
                    << csv_double(rep.nbar_matched) << ','
                    << csv_double(rep.q_jump) << ',' << csv_double(rep.q_free)
                    << ',' << csv_double(rep.gamma) << '\n';
                ++rows;
                if (rep.gamma > 1.0) ++wins;
                if (first || rep.gamma < min_gamma) min_gamma = rep.gamma;
                first = false;
            }
    RunSummary s;
    std::ostringstream t;
    t << "compare-free: " << rows << " rows, gamma > 1 on " << wins << "/" << rows
      << ", min gamma = " << csv_double(min_gamma);
    s.text = t.str();
    return s;
}

RunSummary run_multi_jump(const MultiJumpParams& p, std::ostream& out) {
    require_nonempty("multi-jump", !p.omega0s.empty() && !p.deltas.empty() &&
                                       !p.times.empty() && !p.ns.empty());
    std::ostringstream echo;
    echo << "omega0=" << join(p.omega0s) << " delta=" << join(p.deltas)
         << " T=" << join(p.times) << " n=" << join(p.ns);
    meta_line(out, "multi-jump", echo.str());
    out << "omega0,delta,T,n,alpha_opt,q_opt,rho_n\n";
    long rows = 0, improved = 0;
    for (double w0 : p.omega0s)
        for (double d : p.deltas)
            for (double T : p.times)
                for (int n : p.ns) {
                    const OptimizationResult r = rho_n(w0, d, T, n);
                    const double rho = r.ratio_rho.value();
                    out << csv_double(w0) << ',' << csv_double(d) << ','
                        << csv_double(T) << ',' << n << ','
                        << csv_double(r.alpha_opt) << ',' << csv_double(r.q_opt)
                        << ',' << csv_double(rho) << '\n';
                    ++rows;
                    if (rho >= 1.0) ++improved;
                }
    RunSummary s;
    std::ostringstream t;
    t << "multi-jump: " << rows << " rows, rho_n >= 1 on " << improved << "/" << rows;
    s.text = t.str();
    return s;
}

RunSummary run_scaling(const ScalingParams& p, std::ostream& out) {
    if (p.axis != "T" && p.axis != "delta")
        throw std::invalid_argument("scaling: axis must be T or delta");
    if (!(p.lo > 0.0) || !(p.hi > p.lo))
        throw std::invalid_argument("scaling: need 0 < lo < hi");
    if (p.count < 8)
        throw std::invalid_argument("scaling: need at least 8 samples");
    std::ostringstream echo;
    echo << "axis=" << p.axis << " lo=" << csv_double(p.lo)
         << " hi=" << csv_double(p.hi) << " count=" << p.count
         << " omega0=" << csv_double(p.omega0) << " delta=" << csv_double(p.delta)
         << " T=" << csv_double(p.total_time) << " n=" << p.n_jumps;
    meta_line(out, "scaling", echo.str());
    out << "axis,value,q_opt,fitted_slope\n";

    std::vector<double> xs(p.count), qs(p.count);
    const double ratio = p.hi / p.lo;
    for (int i = 0; i < p.count; ++i) {
        xs[i] = p.lo * std::pow(ratio, static_cast<double>(i) / (p.count - 1));
        ProtocolConfig cfg;
        cfg.omega0 = p.omega0;
        cfg.delta = p.delta;
        cfg.total_time = p.total_time;
        cfg.n_jumps = p.n_jumps;
        if (p.axis == "T")
            cfg.total_time = xs[i];
        else
            cfg.delta = xs[i];
        qs[i] = optimize_alpha(cfg).q_opt;
    }
    const ScalingFit fit = scaling_fit(xs, qs);
    for (int i = 0; i < p.count; ++i)
        out << p.axis << ',' << csv_double(xs[i]) << ',' << csv_double(qs[i]) << ','
            << csv_double(fit.slope) << '\n';

    RunSummary s;
    std::ostringstream t;
    t << "scaling: axis " << p.axis << ", fitted slope = " << csv_double(fit.slope)
      << " over " << fit.n_used << " samples";
    if (fit.n_excluded)
        t << " (" << fit.n_excluded << " nonpositive samples excluded)";
    s.text = t.str();
    return s;
}

RunSummary run_oracle_check(const OracleCheckParams& p, std::ostream& out) {
    require_nonempty("oracle-check", !p.omega0s.empty() && !p.deltas.empty() &&
                                         !p.alphas.empty() && !p.times.empty() &&
                                         !p.ns.empty());
    std::ostringstream echo;
    echo << "omega0=" << join(p.omega0s) << " delta=" << join(p.deltas)
         << " alpha=" << join(p.alphas) << " T=" << join(p.times)
         << " n=" << join(p.ns) << " tol=" << csv_double(p.tol);
    meta_line(out, "oracle-check", echo.str());
    out << "omega0,delta,T,n,alpha,qfi_gaussian,qfi_fock,rel_err\n";

    FdConfig fd;
    fd.estimate_residual = false;
    long rows = 0, bad = 0;
    double max_rel = 0.0;
    for (double w0 : p.omega0s)
        for (double d : p.deltas) {
            // one basis size per (omega0, delta) class: the largest squeezing
            // reached anywhere along any member schedule sets the cutoff
            double rmax = 0.0;
            for (double al : p.alphas)
                for (double T : p.times)
                    for (int n : p.ns) {
                        ProtocolConfig cfg;
                        cfg.omega0 = w0;
                        cfg.delta = d;
                        cfg.alpha = al;
                        cfg.total_time = T;
                        cfg.n_jumps = n;
                        rmax = std::max(rmax, max_squeeze_along(cfg));
                    }
            const int trunc = default_truncation(rmax);
            FockWorkspace ws;
            for (double al : p.alphas)
                for (double T : p.times)
                    for (int n : p.ns) {
                        ProtocolConfig cfg;
                        cfg.omega0 = w0;
                        cfg.delta = d;
                        cfg.alpha = al;
                        cfg.total_time = T;
                        cfg.n_jumps = n;
                        const double g = qfi_gaussian(cfg, fd).qfi;
                        const double f = qfi_pure(cfg, fd, trunc, &ws).qfi;
                        const double rel = std::abs(g - f) /
                                           std::max({std::abs(g), std::abs(f), 1e-300});
                        out << csv_double(w0) << ',' << csv_double(d) << ','
                            << csv_double(T) << ',' << n << ',' << csv_double(al)
                            << ',' << csv_double(g) << ',' << csv_double(f) << ','
                            << csv_double(rel) << '\n';
                        ++rows;
                        max_rel = std::max(max_rel, rel);
                        if (rel > p.tol) ++bad;
                    }
        }
    RunSummary s;
    std::ostringstream t;
    t << "oracle-check: " << rows << " points, max rel err = " << csv_double(max_rel)
      << ", tol = " << csv_double(p.tol) << (bad ? " MISMATCH" : " ok");
    s.text = t.str();
    s.ok = bad == 0;
    return s;
}

}  // namespace freqjump
