#pragma once
// CSV experiment runners behind the CLI subcommands. Every runner writes a
// deterministic CSV (one `# freqjump <version> | <command> | <config echo>`
// comment line, a header row, then %.17g data rows) and returns a short
// human-readable summary.

#include <ostream>
#include <string>
#include <vector>

#include "freqjump/protocol.hpp"

namespace freqjump {

std::string csv_double(double v);

struct RunSummary {
    std::string text;
    bool ok{true};
};

struct SweepAlphaParams {
    std::vector<double> omega0s{1.0};
    std::vector<double> deltas{0.3, 0.5, 0.8, 1.9};
    std::vector<double> times{1.0};
    std::vector<int> ns{1};
    int grid_size{201};
};
RunSummary run_sweep_alpha(const SweepAlphaParams& p, std::ostream& out);

struct OptimizeParams {
    std::vector<double> omega0s{1.0};
    std::vector<double> deltas{0.3, 0.5, 0.8, 5.0};
    std::vector<double> times{1.0};
    std::vector<int> ns{1};
};
RunSummary run_optimize(const OptimizeParams& p, std::ostream& out);

struct CompareFreeParams {
    std::vector<double> omega0s{0.5, 1.0, 2.0, 5.0, 10.0};
    std::vector<double> deltas{1.0};
    std::vector<double> times{2.0, 3.0, 4.0, 5.0};
};
RunSummary run_compare_free(const CompareFreeParams& p, std::ostream& out);

struct MultiJumpParams {
    std::vector<double> omega0s{1.0};
    std::vector<double> deltas{1.0};
    std::vector<double> times{1.0};
    std::vector<int> ns{1, 2, 3, 4, 5, 6};
};
RunSummary run_multi_jump(const MultiJumpParams& p, std::ostream& out);

struct ScalingParams {
    std::string axis{"T"};  // "T" or "delta"
    double lo{1.0};
    double hi{100.0};
    int count{10};
    double omega0{1.0};
    double delta{1.0};        // held fixed when axis = "T"
    double total_time{10.0};  // held fixed when axis = "delta"
    int n_jumps{1};
};
RunSummary run_scaling(const ScalingParams& p, std::ostream& out);

struct OracleCheckParams {
    std::vector<double> omega0s{0.5, 1.0, 2.0, 5.0};
    std::vector<double> deltas{0.5, 1.0, 2.0};
    std::vector<double> alphas{0.1, 0.3, 0.5, 0.8, 1.0};
    std::vector<double> times{1.0, 3.0};
    std::vector<int> ns{1, 2, 3};
    double tol{1e-6};
};
// ok = false when any grid point disagrees beyond tol
RunSummary run_oracle_check(const OracleCheckParams& p, std::ostream& out);

}  // namespace freqjump
