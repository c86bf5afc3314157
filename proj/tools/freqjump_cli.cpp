#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "freqjump/estimation.hpp"
#include "freqjump/experiments.hpp"
#include "freqjump/fock.hpp"
#include "freqjump/version.hpp"

namespace {

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << data;
    if (!out) throw std::runtime_error("short write to " + path);
}

// --oracle on sweep-alpha: one mid-sweep point per parameter combination,
// gaussian route against the number-basis route
int spot_check(const freqjump::SweepAlphaParams& p) {
    freqjump::FdConfig fd;
    fd.estimate_residual = false;
    double max_rel = 0.0;
    long pts = 0;
    for (double w0 : p.omega0s)
        for (double d : p.deltas)
            for (double T : p.times)
                for (int n : p.ns) {
                    freqjump::ProtocolConfig cfg;
                    cfg.omega0 = w0;
                    cfg.delta = d;
                    cfg.alpha = 0.5;
                    cfg.total_time = T;
                    cfg.n_jumps = n;
                    const double g = freqjump::qfi_gaussian(cfg, fd).qfi;
                    const double f = freqjump::qfi_pure(cfg, fd).qfi;
                    const double rel =
                        std::abs(g - f) / std::max({std::abs(g), std::abs(f), 1e-300});
                    max_rel = std::max(max_rel, rel);
                    ++pts;
                }
    std::cout << "oracle spot-check: " << pts
              << " points, max rel err = " << freqjump::csv_double(max_rel)
              << " (tol 1e-06)\n";
    if (max_rel > 1e-6) {
        std::cerr << "error: oracle mismatch beyond 1e-06\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequency-jump protocol: QFI/QSNR evaluation, schedule "
                 "optimization, resource-matched comparison, oracle checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FREQJUMP_VERSION);

    freqjump::SweepAlphaParams sweep;
    std::string sweep_out = "sweep-alpha.csv";
    bool sweep_oracle = false;
    auto* sa = app.add_subcommand(
        "sweep-alpha", "QSNR versus squeezing fraction on a uniform alpha grid");
    sa->add_option("--omega0", sweep.omega0s, "oscillator frequencies")->delimiter(',');
    sa->add_option("--delta", sweep.deltas, "jump amplitudes")->delimiter(',');
    sa->add_option("--T,--time", sweep.times, "total durations")->delimiter(',');
    sa->add_option("--n", sweep.ns, "jump counts")->delimiter(',');
    sa->add_option("--grid", sweep.grid_size, "alpha grid size (>= 64)");
    sa->add_option("-o,--output", sweep_out, "output CSV path");
    sa->add_flag("--oracle", sweep_oracle,
                 "spot-check one point per combination against the number-basis oracle");

    freqjump::OptimizeParams opt;
    std::string opt_out = "optimize.csv";
    auto* op = app.add_subcommand("optimize",
                                  "optimal squeezing fraction per parameter set");
    op->add_option("--omega0", opt.omega0s, "oscillator frequencies")->delimiter(',');
    op->add_option("--delta", opt.deltas, "jump amplitudes")->delimiter(',');
    op->add_option("--T,--time", opt.times, "total durations")->delimiter(',');
    op->add_option("--n", opt.ns, "jump counts")->delimiter(',');
    op->add_option("-o,--output", opt_out, "output CSV path");

    freqjump::CompareFreeParams cmp;
    std::string cmp_out = "compare-free.csv";
    auto* cf = app.add_subcommand(
        "compare-free",
        "optimized protocol against free evolution at matched mean energy");
    cf->add_option("--omega0", cmp.omega0s, "oscillator frequencies")->delimiter(',');
    cf->add_option("--delta", cmp.deltas, "jump amplitudes")->delimiter(',');
    cf->add_option("--T,--time", cmp.times, "total durations")->delimiter(',');
    cf->add_option("-o,--output", cmp_out, "output CSV path");

    freqjump::MultiJumpParams mj;
    std::string mj_out = "multi-jump.csv";
    auto* mu = app.add_subcommand("multi-jump",
                                  "improvement ratio rho_n for split schedules");
    mu->add_option("--omega0", mj.omega0s, "oscillator frequencies")->delimiter(',');
    mu->add_option("--delta", mj.deltas, "jump amplitudes")->delimiter(',');
    mu->add_option("--T,--time", mj.times, "total durations")->delimiter(',');
    mu->add_option("--n", mj.ns, "jump counts")->delimiter(',');
    mu->add_option("-o,--output", mj_out, "output CSV path");

    freqjump::ScalingParams sc;
    std::string sc_out = "scaling.csv";
    auto* sg = app.add_subcommand("scaling",
                                  "log-log slope of optimized QSNR along T or delta");
    sg->add_option("--axis", sc.axis, "sweep axis: T or delta");
    sg->add_option("--lo", sc.lo, "lower end of the sweep");
    sg->add_option("--hi", sc.hi, "upper end of the sweep");
    sg->add_option("--count", sc.count, "number of log-spaced samples (>= 8)");
    sg->add_option("--omega0", sc.omega0, "oscillator frequency");
    sg->add_option("--delta", sc.delta, "jump amplitude (fixed when axis = T)");
    sg->add_option("--T,--time", sc.total_time, "total duration (fixed when axis = delta)");
    sg->add_option("--n", sc.n_jumps, "jump count");
    sg->add_option("-o,--output", sc_out, "output CSV path");

    freqjump::OracleCheckParams orc;
    std::string orc_out = "oracle-check.csv";
    auto* oc = app.add_subcommand(
        "oracle-check", "gaussian route against the number-basis route on a grid");
    oc->add_option("--omega0", orc.omega0s, "oscillator frequencies")->delimiter(',');
    oc->add_option("--delta", orc.deltas, "jump amplitudes")->delimiter(',');
    oc->add_option("--alpha", orc.alphas, "squeezing fractions")->delimiter(',');
    oc->add_option("--T,--time", orc.times, "total durations")->delimiter(',');
    oc->add_option("--n", orc.ns, "jump counts")->delimiter(',');
    oc->add_option("--tol", orc.tol, "relative mismatch tolerance");
    oc->add_option("-o,--output", orc_out, "output CSV path");

    app.set_config("--config", "",
                   "read options from a key=value file ([subcommand] section; "
                   "command-line flags win");
    app.allow_config_extras(CLI::config_extras_mode::error);
    for (CLI::App* s : {sa, op, cf, mu, sg, oc}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2; help/version exit 0
    }

    try {
        std::ostringstream csv;
        freqjump::RunSummary summary;
        std::string out_path;
        if (app.got_subcommand(sa)) {
            summary = freqjump::run_sweep_alpha(sweep, csv);
            out_path = sweep_out;
        } else if (app.got_subcommand(op)) {
            summary = freqjump::run_optimize(opt, csv);
            out_path = opt_out;
        } else if (app.got_subcommand(cf)) {
            summary = freqjump::run_compare_free(cmp, csv);
            out_path = cmp_out;
        } else if (app.got_subcommand(mu)) {
            summary = freqjump::run_multi_jump(mj, csv);
            out_path = mj_out;
        } else if (app.got_subcommand(sg)) {
            summary = freqjump::run_scaling(sc, csv);
            out_path = sc_out;
        } else {
            summary = freqjump::run_oracle_check(orc, csv);
            out_path = orc_out;
        }
        write_file(out_path, csv.str());
        std::cout << summary.text << "\nwrote " << out_path << "\n";
        if (!summary.ok) {
            std::cerr << "error: oracle mismatch beyond tolerance\n";
            return 1;
        }
        if (app.got_subcommand(sa) && sweep_oracle) return spot_check(sweep);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
