#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptnorm/evolution.hpp"

namespace py = pybind11;
using namespace ptnorm;

PYBIND11_MODULE(_ptnorm, m) {
    m.doc() = "PT-symmetric spectra, pseudo-inner products, and pseudo-unitary evolution";

    py::register_exception<Error>(m, "Error");

    // numerics
    m.def("gauss_legendre", &gauss_legendre, py::arg("points"),
          "Gauss-Legendre nodes and weights on [-1, 1]");
    m.def("laguerre_eval", &laguerre_eval, py::arg("n"), py::arg("alpha"), py::arg("z"),
          "Generalized Laguerre polynomial L_n^(alpha)(z)");

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights)
        .def_readonly("order", &QuadratureRule::order);

    // square well
    py::class_<SquareWellParams>(m, "SquareWellParams")
        .def(py::init<double>(), py::arg("t2") = 0.0)
        .def_readwrite("t2", &SquareWellParams::t2);

    py::class_<OvalPoint>(m, "OvalPoint")
        .def_readonly("p", &OvalPoint::p)
        .def_readonly("q", &OvalPoint::q);

    py::class_<SquareWellLevel>(m, "SquareWellLevel")
        .def_readonly("level_index", &SquareWellLevel::level_index)
        .def_readonly("energy", &SquareWellLevel::energy)
        .def_readonly("lambda_", &SquareWellLevel::lambda)
        .def_readonly("kappa", &SquareWellLevel::kappa)
        .def_readonly("match_coeff", &SquareWellLevel::match_coeff)
        .def_readonly("quasi_parity", &SquareWellLevel::quasi_parity)
        .def_readonly("broken", &SquareWellLevel::broken)
        .def_readonly("exceptional", &SquareWellLevel::exceptional);

    py::class_<RealLevels>(m, "RealLevels")
        .def_readonly("levels", &RealLevels::levels)
        .def_readonly("exhausted_ovals", &RealLevels::exhausted_ovals);

    py::class_<CriticalCoupling>(m, "CriticalCoupling")
        .def_readonly("oval_index", &CriticalCoupling::oval_index)
        .def_readonly("t2_crit", &CriticalCoupling::t2_crit)
        .def_readonly("merge_point", &CriticalCoupling::merge_point);

    m.def("oval_branch", &oval_branch, py::arg("n"), py::arg("p"));
    m.def("matching_residual", &matching_residual, py::arg("energy"), py::arg("t2"));
    m.def("real_levels", &real_levels, py::arg("params"), py::arg("n_max"));
    m.def("critical_coupling", &critical_coupling, py::arg("n"));
    m.def("broken_pair", &broken_pair, py::arg("params"), py::arg("n"));
    m.def("wavefunction",
          static_cast<Complex (*)(const SquareWellLevel&, double)>(&wavefunction),
          py::arg("level"), py::arg("x"));

    // oscillator
    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init<double, double>(), py::arg("g") = 0.0, py::arg("delta") = 1.0)
        .def_readwrite("g", &OscillatorParams::g)
        .def_readwrite("delta", &OscillatorParams::delta);

    py::class_<EigenstateLabel>(m, "EigenstateLabel")
        .def_readonly("quasi_parity", &EigenstateLabel::quasi_parity)
        .def_readonly("radial_index", &EigenstateLabel::radial_index)
        .def_readonly("level_index", &EigenstateLabel::level_index);

    py::class_<OscillatorState>(m, "OscillatorState")
        .def_readonly("label", &OscillatorState::label)
        .def_readonly("params", &OscillatorState::params)
        .def_readonly("exponent", &OscillatorState::exponent)
        .def_readonly("energy", &OscillatorState::energy)
        .def_readonly("norm_const", &OscillatorState::norm_const);

    m.def("make_state", &make_state, py::arg("params"), py::arg("quasi_parity"), py::arg("n"));
    m.def("spectrum", &spectrum, py::arg("params"), py::arg("n_max"));
    m.def("wavefunction",
          static_cast<Complex (*)(const OscillatorState&, Complex)>(&wavefunction),
          py::arg("state"), py::arg("r"));
    m.def("wavefunction_of", &wavefunction_of, py::arg("state"));
    m.def("normalize", &normalize, py::arg("state"), py::arg("contour"));

    // pseudo-metric
    py::class_<PtContour>(m, "PtContour")
        .def(py::init<double, double, int, int>(), py::arg("delta"), py::arg("half_length"),
             py::arg("panels") = 16, py::arg("points_per_panel") = 50)
        .def_readonly("delta", &PtContour::delta)
        .def_readonly("half_length", &PtContour::half_length)
        .def_readonly("ts", &PtContour::ts)
        .def_readonly("weights", &PtContour::weights)
        .def("point", &PtContour::point, py::arg("t"))
        .def("__len__", &PtContour::size);

    m.def("oscillator_contour", &oscillator_contour, py::arg("delta") = 1.0,
          py::arg("half_length") = 8.0);
    m.def("squarewell_contour", &squarewell_contour);

    m.def("pseudo_product", &pseudo_product, py::arg("phi"), py::arg("psi"),
          py::arg("contour"), py::arg("boundary_tol") = 1e-9,
          "Indefinite product <phi|P|psi> along the contour");
    m.def("norm_product", &norm_product, py::arg("psi"), py::arg("contour"));
    m.def("max_abs_on_contour", &max_abs_on_contour, py::arg("psi"), py::arg("contour"));

    py::enum_<GramClass>(m, "GramClass")
        .value("UnbrokenDiagonal", GramClass::UnbrokenDiagonal)
        .value("BrokenBlock", GramClass::BrokenBlock)
        .value("Inconsistent", GramClass::Inconsistent);

    py::class_<GramMatrix>(m, "GramMatrix")
        .def_readonly("size", &GramMatrix::size)
        .def_readonly("entries", &GramMatrix::entries)
        .def_readonly("labels", &GramMatrix::labels)
        .def_readonly("classification", &GramMatrix::classification)
        .def("at", &GramMatrix::at, py::arg("i"), py::arg("j"));

    m.def("gram", &gram, py::arg("states"), py::arg("labels"), py::arg("contour"),
          py::arg("tol") = 1e-6);

    py::class_<BrokenPair>(m, "BrokenPair")
        .def(py::init<>())
        .def_readwrite("psi_plus", &BrokenPair::psi_plus)
        .def_readwrite("psi_minus", &BrokenPair::psi_minus)
        .def_readwrite("energy", &BrokenPair::energy)
        .def_readwrite("cross_norm", &BrokenPair::cross_norm);

    m.def("normalize_pair", &normalize_pair, py::arg("pair"), py::arg("contour"),
          py::arg("tol") = 1e-6);

    py::class_<ProjectorTerm>(m, "ProjectorTerm")
        .def(py::init<>())
        .def_readwrite("ket", &ProjectorTerm::ket)
        .def_readwrite("bra", &ProjectorTerm::bra)
        .def_readwrite("weight", &ProjectorTerm::weight);

    m.def("completeness_defect", &completeness_defect, py::arg("basis"), py::arg("contour"),
          py::arg("f"), py::arg("grid"));

    // evolution
    py::class_<Mode>(m, "Mode")
        .def_readonly("proj", &Mode::proj)
        .def_readonly("energy", &Mode::energy)
        .def_readonly("name", &Mode::name);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_readonly("modes", &SpectralDecomposition::modes)
        .def_readonly("truncation", &SpectralDecomposition::truncation);

    py::class_<EvolvedState>(m, "EvolvedState")
        .def_readonly("coeffs0", &EvolvedState::coeffs0)
        .def_readonly("time", &EvolvedState::time)
        .def_readonly("initial_pseudo_norm", &EvolvedState::initial_pseudo_norm)
        .def_readonly("reconstruction_defect", &EvolvedState::reconstruction_defect)
        .def("coeffs", &EvolvedState::coeffs)
        .def("reconstruct", &EvolvedState::reconstruct);

    m.def("decompose", &decompose, py::arg("psi0"), py::arg("basis"), py::arg("contour"),
          py::arg("recon_tol") = 5e-3);
    m.def("evolve", &evolve, py::arg("state"), py::arg("t"));

    py::class_<NormTraceRow>(m, "NormTraceRow")
        .def_readonly("t", &NormTraceRow::t)
        .def_readonly("pseudo_norm", &NormTraceRow::pseudo_norm)
        .def_readonly("ordinary_norm", &NormTraceRow::ordinary_norm);

    m.def("pseudo_norm_trace", &pseudo_norm_trace, py::arg("psi0"), py::arg("basis"),
          py::arg("times"), py::arg("contour"), py::arg("recon_tol") = 5e-3);

    m.def("grid_oracle", &grid_oracle, py::arg("params"), py::arg("psi0"), py::arg("t"),
          py::arg("steps"),
          "Crank-Nicolson cross-check of the spectral propagator on a uniform grid");
    m.def("grid_pseudo_norm", &grid_pseudo_norm, py::arg("psi"));

    m.def("oscillator_basis", &oscillator_basis, py::arg("params"), py::arg("M"),
          py::arg("contour"));
    m.def("squarewell_basis", &squarewell_basis, py::arg("params"), py::arg("n_max"),
          py::arg("contour"));
    m.def("oscillator_gram", &oscillator_gram, py::arg("params"), py::arg("M"),
          py::arg("contour"), py::arg("tol") = 1e-6);
    m.def("squarewell_gram", &squarewell_gram, py::arg("params"), py::arg("M"),
          py::arg("contour"), py::arg("tol") = 1e-6);
}
