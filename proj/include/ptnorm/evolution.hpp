#pragma once

#include <string>
#include <vector>

#include "ptnorm/oscillator.hpp"
#include "ptnorm/pseudometric.hpp"
#include "ptnorm/squarewell.hpp"

namespace ptnorm {

/// One eigenmode of the spectral representation
/// H = sum_n |ket_n> E_n w_n <bra_n| P. Unbroken modes carry w = +-1 and are
/// their own bra; pair modes carry the opposite member as bra with w = 1 and
/// energies E, conj(E).
struct Mode {
    ProjectorTerm proj;
    Complex energy{};
    std::string name;
};

struct SpectralDecomposition {
    std::vector<Mode> modes;
    int truncation = 0;
};

/// State expanded over a SpectralDecomposition. Coefficients are stored at
/// t = 0 together with the accumulated time, so evolving twice composes
/// exactly: a_n(t) = a_n(0) * exp(-i E_n t).
struct EvolvedState {
    SpectralDecomposition basis;
    std::vector<Complex> coeffs0;
    double time = 0.0;
    Complex initial_pseudo_norm{};
    double reconstruction_defect = 0.0;

    std::vector<Complex> coeffs() const;
    WaveFn reconstruct() const;
};

/// Project psi0 onto the basis: a_n(0) = w_n <bra_n|P|psi0>. The truncated
/// identity is then applied back to psi0 and the sup-norm defect over the
/// contour nodes recorded; a defect above recon_tol throws
/// PoorReconstruction (the state lies outside the truncated span).
EvolvedState decompose(const WaveFn& psi0, const SpectralDecomposition& basis,
                       const PtContour& contour, double recon_tol = 5e-3);

/// Advance by t: multiplies each coefficient by exp(-i E_n t) (implemented as
/// time accumulation so evolve(evolve(s, t1), t2) == evolve(s, t1 + t2)).
/// Throws OverflowGuard when |Im E_n| * total time would overflow exp.
EvolvedState evolve(const EvolvedState& state, double t);

struct NormTraceRow {
    double t = 0.0;
    Complex pseudo_norm{};
    double ordinary_norm = 0.0;
};

/// Decompose psi0 once, then for each time reconstruct psi(t) on the contour
/// and integrate both the conserved pseudo-norm <psi|P|psi> and the ordinary
/// norm <psi|psi>.
std::vector<NormTraceRow> pseudo_norm_trace(const WaveFn& psi0, const SpectralDecomposition& basis,
                                            const std::vector<double>& times,
                                            const PtContour& contour, double recon_tol = 5e-3);

/// Independent check of the spectral propagator for the square well:
/// Crank-Nicolson integration of i dpsi/dt = (-d^2/dx^2 - i T^2 sign x) psi
/// on psi0.size() interior points of (-1, 1) with Dirichlet ends (the sign
/// convention matches the eigenfunctions: +iT^2 on the left half). Returns
/// psi(t). Requires at least 400 grid points and steps >= 1.
std::vector<Complex> grid_oracle(const SquareWellParams& params, const std::vector<Complex>& psi0,
                                 double t, int steps);

/// Discrete pseudo-norm sum_j conj(psi(-x_j)) psi(x_j) dx on the uniform
/// interior grid used by grid_oracle.
Complex grid_pseudo_norm(const std::vector<Complex>& psi);

// -- Model assembly -------------------------------------------------------
//
// Ready-made spectral decompositions with normalized states: the building
// blocks for the CLI and for conservation experiments.

/// Unbroken oscillator basis of the first M levels (g > -1/4), each state
/// normalized so its self pseudo-product is +-1; that sign is the mode
/// weight. Broken couplings (g < -1/4) yield pair modes for n = 0..M/2-1
/// with psi_minus rescaled so both cross products are 1.
SpectralDecomposition oscillator_basis(const OscillatorParams& params, int M,
                                       const PtContour& contour);

/// Square-well basis on ovals 0..n_max: real levels normalized to self
/// product +-1, plus the conjugate pair modes of any oval past its critical
/// coupling.
SpectralDecomposition squarewell_basis(const SquareWellParams& params, int n_max,
                                       const PtContour& contour);

/// Gram matrix of the first M normalized oscillator levels (pair blocks in
/// the broken regime).
GramMatrix oscillator_gram(const OscillatorParams& params, int M, const PtContour& contour,
                           double tol = 1e-6);

/// Gram matrix of the square-well basis (real levels, pair blocks past
/// critical), truncated to the first M modes.
GramMatrix squarewell_gram(const SquareWellParams& params, int M, const PtContour& contour,
                           double tol = 1e-6);

} // namespace ptnorm
