#pragma once

#include <vector>

#include "ptnorm/numerics.hpp"
#include "ptnorm/pseudometric.hpp"

namespace ptnorm {

/// Radial oscillator -d^2/dr^2 + g/r^2 + r^2 evaluated on the shifted line
/// r = x - i*delta, which passes below the centrifugal singularity at r = 0.
/// g > -1/4 gives a real spectrum; g < -1/4 gives conjugate pairs.
struct OscillatorParams {
    double g = 0.0;
    double delta = 1.0; // contour shift, > 0
};

/// Bound-state label: quasi-parity Q = +-1 and radial index n >= 0 combine
/// into the level index N = 2n + (1-Q)/2, so Q = +1 states sit at even N.
struct EigenstateLabel {
    int quasi_parity = +1;
    int radial_index = 0;
    int level_index = 0;
};

/// Closed-form eigenstate. exponent e = Q * sqrt(g + 1/4) (principal root:
/// real Q*alpha above g = -1/4, imaginary i*Q*gamma below), energy
/// E = 4n + 2 - 2e, wavefunction N r^{1/2-e} e^{-r^2/2} L_n^{(-e)}(r^2).
struct OscillatorState {
    EigenstateLabel label;
    OscillatorParams params;
    Complex exponent{};
    Complex energy{};
    Complex norm_const{1.0, 0.0};
};

/// Build the state with the given quasi-parity and radial index. Throws
/// ExceptionalCoupling at g = -1/4 (confluent case, excluded) and
/// InvalidArgument for delta <= 0 or n < 0.
OscillatorState make_state(const OscillatorParams& params, int quasi_parity, int n);

/// Both quasi-parity families up to radial index n_max, ordered by level
/// index N = 0, 1, ..., 2*n_max + 1.
std::vector<OscillatorState> spectrum(const OscillatorParams& params, int n_max);

/// Evaluate the closed-form wavefunction. The complex power r^{1/2-e} takes
/// the branch cut along the positive imaginary axis, so the contour and its
/// image under r -> -conj(r) stay in one analytic sheet. Throws BranchCut on
/// the cut (including r = 0).
Complex wavefunction(const OscillatorState& state, Complex r);

/// Convenience callable for quadrature and evolution code.
WaveFn wavefunction_of(const OscillatorState& state);

/// Rescale norm_const so |<psi|P|psi>| = 1. The product's sign cannot be
/// changed by scaling; inside -1/4 < g < 3/4 it already equals the
/// quasi-parity (-1)^N. The remaining phase freedom is fixed by requiring
/// conj(psi(-conj r)) = +psi(r) and arg(norm_const) in [0, pi). Throws
/// ZeroPseudoNorm when the self-product vanishes (broken regime: use pair
/// normalization instead).
OscillatorState normalize(const OscillatorState& state, const PtContour& contour);

} // namespace ptnorm
