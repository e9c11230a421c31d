#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptnorm/numerics.hpp"

namespace ptnorm {

using WaveFn = std::function<Complex(Complex)>;

/// Straight integration path r(t) = t - i*delta, t in [-L, L], carrying a
/// composite Gauss-Legendre grid. delta = 0, L = 1 is the square-well
/// interval; the oscillator default is delta = 1, L = 8 with 16 panels of 50
/// points (panel edges land on t = 0, where square-well integrands have a
/// derivative kink).
struct PtContour {
    PtContour(double delta, double half_length, int panels = 16, int points_per_panel = 50);

    double delta = 1.0;
    double half_length = 8.0;
    int panels = 16;
    int points_per_panel = 50;

    /// Parameter values t_j and quadrature weights (weights sum to 2L).
    std::vector<double> ts;
    std::vector<double> weights;

    Complex point(double t) const { return {t, -delta}; }
    std::size_t size() const { return ts.size(); }
};

/// Contour defaults: the oscillator setting and the square-well interval.
PtContour oscillator_contour(double delta = 1.0, double half_length = 8.0);
PtContour squarewell_contour();

/// The indefinite product <phi|P|psi> = integral of conj(phi(-conj r)) psi(r) dt.
/// On a real contour this is the parity-weighted product
/// integral of conj(phi(-x)) psi(x) dx. The map r -> -conj(r) sends the
/// contour to itself, so both factors are evaluated on the same grid.
/// Throws TruncationTooTight if the integrand at the contour ends r(+-L)
/// exceeds boundary_tol (the contour is too short for these functions).
Complex pseudo_product(const WaveFn& phi, const WaveFn& psi, const PtContour& contour,
                       double boundary_tol = 1e-9);

/// Ordinary L2 norm squared along the contour: integral of |psi(r(t))|^2 dt.
double norm_product(const WaveFn& psi, const PtContour& contour);

/// Largest |psi| over the contour nodes.
double max_abs_on_contour(const WaveFn& psi, const PtContour& contour);

enum class GramClass {
    UnbrokenDiagonal, // diag(+-1), off-diagonal below tolerance
    BrokenBlock,      // 2x2 pair blocks with zero diagonal, plus +-1 singles
    Inconsistent,
};

const char* to_string(GramClass c);

struct GramMatrix {
    std::size_t size = 0;
    std::vector<Complex> entries; // row-major, size x size
    std::vector<std::string> labels;
    GramClass classification = GramClass::UnbrokenDiagonal;

    Complex at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// Pairwise pseudo-product table of a state list. Classification uses tol:
/// entries below tol count as zero, diagonals within tol of +-1 count as unit.
GramMatrix gram(const std::vector<WaveFn>& states, const std::vector<std::string>& labels,
                const PtContour& contour, double tol = 1e-6);

/// A degenerate-energy doublet in the broken regime: self pseudo-products of
/// both members vanish and the cross product c = <psi_plus|P|psi_minus> is
/// the only nonzero metric entry. energy is the Im E > 0 member's eigenvalue.
struct BrokenPair {
    WaveFn psi_plus;
    WaveFn psi_minus;
    Complex energy{};
    Complex cross_norm{};
};

/// Rescale psi_minus so the cross product becomes exactly 1, re-verifying
/// that the self-overlaps stay below tol. Throws DegeneratePair when
/// |c| < 1e-12.
BrokenPair normalize_pair(const BrokenPair& pair, const PtContour& contour, double tol = 1e-6);

/// One term |ket> w <bra| P of a resolution of the identity. Unbroken states
/// are their own bra with w = +-1 (the self pseudo-product sign); pair
/// members use the opposite member as bra with w = 1 after pair
/// normalization.
struct ProjectorTerm {
    WaveFn ket;
    WaveFn bra;
    Complex weight{1.0, 0.0};
};

/// Apply the truncated identity sum_n ket_n w_n <bra_n|P|f> and return
/// max |reconstruction - f| over the sample points.
double completeness_defect(const std::vector<ProjectorTerm>& basis, const PtContour& contour,
                           const WaveFn& f, const std::vector<Complex>& grid);

} // namespace ptnorm
