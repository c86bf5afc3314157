#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freqjump/dynamics.hpp"
#include "freqjump/estimation.hpp"
#include "freqjump/fock.hpp"
#include "freqjump/optimize.hpp"
#include "freqjump/protocol.hpp"
#include "freqjump/squeezing.hpp"
#include "freqjump/version.hpp"

namespace py = pybind11;
using namespace freqjump;

PYBIND11_MODULE(_core, m) {
    m.doc() = "frequency-jump protocol: symplectic dynamics, QFI/QSNR, "
              "schedule optimization, number-basis oracle";
    m.attr("__version__") = FREQJUMP_VERSION;

    py::class_<ProtocolConfig>(m, "ProtocolConfig")
        .def(py::init<>())
        .def_readwrite("omega0", &ProtocolConfig::omega0)
        .def_readwrite("delta", &ProtocolConfig::delta)
        .def_readwrite("alpha", &ProtocolConfig::alpha)
        .def_readwrite("total_time", &ProtocolConfig::total_time)
        .def_readwrite("n_jumps", &ProtocolConfig::n_jumps)
        .def("omega1", &ProtocolConfig::omega1)
        .def("eta0", &ProtocolConfig::eta0)
        .def("tau_n", &ProtocolConfig::tau_n)
        .def("t_n", &ProtocolConfig::t_n)
        .def("validate", &ProtocolConfig::validate);

    py::class_<Symplectic2>(m, "Symplectic2")
        .def(py::init<>())
        .def_readwrite("m11", &Symplectic2::m11)
        .def_readwrite("m12", &Symplectic2::m12)
        .def_readwrite("m21", &Symplectic2::m21)
        .def_readwrite("m22", &Symplectic2::m22)
        .def("det", &Symplectic2::det)
        .def("transposed", &Symplectic2::transposed)
        .def_static("identity", &Symplectic2::identity)
        .def("__mul__",
             [](const Symplectic2& a, const Symplectic2& b) { return a * b; });

    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init<>())
        .def_readwrite("sxx", &GaussianState::sxx)
        .def_readwrite("sxy", &GaussianState::sxy)
        .def_readwrite("syy", &GaussianState::syy)
        .def("det", &GaussianState::det)
        .def_static("vacuum", &GaussianState::vacuum);

    m.def("congruence", &congruence);
    m.def("rotation_propagator", &rotation_propagator);
    m.def("jump_propagator", &jump_propagator);
    m.def("cycle_propagator", &cycle_propagator);
    m.def("schedule_propagator", &schedule_propagator);
    m.def("evolve_vacuum", &evolve_vacuum);

    py::class_<SqueezeParams>(m, "SqueezeParams")
        .def(py::init<>())
        .def(py::init([](double r, double phi) {
                 SqueezeParams sp;
                 sp.r = r;
                 sp.phi = phi;
                 return sp;
             }),
             py::arg("r"), py::arg("phi") = 0.0)
        .def_readwrite("r", &SqueezeParams::r)
        .def_readwrite("phi", &SqueezeParams::phi);

    py::class_<ResourceAccount>(m, "ResourceAccount")
        .def(py::init<>())
        .def_readwrite("nbar", &ResourceAccount::nbar)
        .def_readwrite("var_n", &ResourceAccount::var_n);

    py::class_<AlphaMax>(m, "AlphaMax")
        .def(py::init<>())
        .def_readwrite("value", &AlphaMax::value)
        .def_readwrite("clamped", &AlphaMax::clamped);

    m.def("squeeze_params", &squeeze_params);
    m.def("squeeze_covariance", &squeeze_covariance);
    m.def("extract_squeeze", &extract_squeeze);
    m.def("r_max", &r_max);
    m.def("alpha_max", &alpha_max);
    m.def("nbar_from_squeeze", &nbar_from_squeeze);
    m.def("max_squeeze_along", &max_squeeze_along, py::arg("cfg"),
          py::arg("samples_per_segment") = 160);

    py::class_<FdConfig>(m, "FdConfig")
        .def(py::init<>())
        .def_readwrite("step_scale", &FdConfig::step_scale)
        .def_readwrite("estimate_residual", &FdConfig::estimate_residual)
        .def_readwrite("residual_threshold", &FdConfig::residual_threshold);

    py::class_<QfiResult>(m, "QfiResult")
        .def(py::init<>())
        .def_readonly("qfi", &QfiResult::qfi)
        .def_readonly("qsnr", &QfiResult::qsnr)
        .def_readonly("fd_step", &QfiResult::fd_step)
        .def_readonly("fd_residual", &QfiResult::fd_residual)
        .def_readonly("flagged", &QfiResult::flagged);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def(py::init<>())
        .def_readonly("gamma", &ComparisonReport::gamma)
        .def_readonly("q_jump", &ComparisonReport::q_jump)
        .def_readonly("q_free", &ComparisonReport::q_free)
        .def_readonly("nbar_matched", &ComparisonReport::nbar_matched)
        .def_readonly("config", &ComparisonReport::config);

    m.def("qfi_gaussian", &qfi_gaussian, py::arg("cfg"), py::arg("fd") = FdConfig{});
    m.def("qfi_formula_sanity", &qfi_formula_sanity);
    m.def("qfi_rotated_sanity", &qfi_rotated_sanity);
    m.def("free_evolution_qfi", &free_evolution_qfi);
    m.def("gamma_ratio", &gamma_ratio);

    py::class_<FockVector>(m, "FockVector")
        .def(py::init<>())
        .def_readwrite("coeffs", &FockVector::coeffs)
        .def("truncation", &FockVector::truncation)
        .def("norm2", &FockVector::norm2)
        .def("tail_mass", &FockVector::tail_mass)
        .def("mean_n", &FockVector::mean_n)
        .def("second_moments", &FockVector::second_moments);

    m.def("default_truncation", &default_truncation, py::arg("r"),
          py::arg("tol") = 1e-14);
    m.def("squeezed_vacuum_coeffs", &squeezed_vacuum_coeffs);
    m.def(
        "evolve_fock",
        [](const ProtocolConfig& cfg, int truncation) {
            return evolve_fock(cfg, truncation, nullptr);
        },
        py::arg("cfg"), py::arg("truncation"));
    m.def("gauge_fix", &gauge_fix);
    m.def(
        "qfi_pure",
        [](const ProtocolConfig& cfg, const FdConfig& fd, int truncation) {
            return qfi_pure(cfg, fd, truncation, nullptr);
        },
        py::arg("cfg"), py::arg("fd") = FdConfig{}, py::arg("truncation") = -1);

    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def(py::init<>())
        .def_readonly("alpha_opt", &OptimizationResult::alpha_opt)
        .def_readonly("q_opt", &OptimizationResult::q_opt)
        .def_readonly("alpha_max_marker", &OptimizationResult::alpha_max_marker)
        .def_readonly("boundary", &OptimizationResult::boundary)
        .def_readonly("degenerate", &OptimizationResult::degenerate)
        .def_readonly("n_jumps", &OptimizationResult::n_jumps)
        .def_readonly("ratio_rho", &OptimizationResult::ratio_rho);

    py::class_<ScanPoint>(m, "ScanPoint")
        .def(py::init<>())
        .def_readonly("alpha", &ScanPoint::alpha)
        .def_readonly("qfi", &ScanPoint::qfi)
        .def_readonly("qsnr", &ScanPoint::qsnr)
        .def_readonly("flagged", &ScanPoint::flagged);

    py::class_<ScalingFit>(m, "ScalingFit")
        .def(py::init<>())
        .def_readonly("slope", &ScalingFit::slope)
        .def_readonly("n_used", &ScalingFit::n_used)
        .def_readonly("n_excluded", &ScalingFit::n_excluded);

    m.def("scan_alpha", &scan_alpha, py::arg("base"), py::arg("grid_size") = 201,
          py::arg("fd") = FdConfig{});
    m.def("optimize_alpha", &optimize_alpha);
    m.def("rho_n", &rho_n);
    m.def("scaling_fit", &scaling_fit);
}
