#include "ptnorm/oscillator.hpp"

#include <cmath>

namespace ptnorm {

namespace {

// r^w with the cut along the positive imaginary axis: the argument is taken
// in (-3*pi/2, pi/2] so the lower half-plane contour and its PT image
// -conj(r) live on one sheet.
Complex power_cut(Complex r, Complex w) {
    if (r.real() == 0.0 && r.imag() >= 0.0) {
        throw Error(ErrorKind::BranchCut, "wavefunction evaluated on the branch cut");
    }
    double theta = std::arg(r);
    if (theta > M_PI / 2.0) {
        theta -= 2.0 * M_PI;
    }
    Complex logr{std::log(std::abs(r)), theta};
    return std::exp(w * logr);
}

} // namespace

OscillatorState make_state(const OscillatorParams& params, int quasi_parity, int n) {
    if (params.delta <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "contour shift delta must be > 0");
    }
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "radial index must be >= 0");
    }
    if (quasi_parity != +1 && quasi_parity != -1) {
        throw Error(ErrorKind::InvalidArgument, "quasi-parity must be +1 or -1");
    }
    if (params.g == -0.25) {
        throw Error(ErrorKind::ExceptionalCoupling,
                    "g = -1/4 is the confluent point; the two families merge");
    }
    OscillatorState st;
    st.label.quasi_parity = quasi_parity;
    st.label.radial_index = n;
    st.label.level_index = 2 * n + (1 - quasi_parity) / 2;
    st.params = params;
    st.exponent = double(quasi_parity) * std::sqrt(Complex(params.g + 0.25, 0.0));
    st.energy = Complex(4.0 * n + 2.0, 0.0) - 2.0 * st.exponent;
    st.norm_const = Complex(1.0, 0.0);
    return st;
}

std::vector<OscillatorState> spectrum(const OscillatorParams& params, int n_max) {
    if (n_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
    }
    std::vector<OscillatorState> out(2 * std::size_t(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        out[2 * n] = make_state(params, +1, n);
        out[2 * n + 1] = make_state(params, -1, n);
    }
    return out;
}

Complex wavefunction(const OscillatorState& state, Complex r) {
    Complex r2 = r * r;
    Complex head = power_cut(r, Complex(0.5, 0.0) - state.exponent);
    return state.norm_const * head * std::exp(-0.5 * r2) *
           laguerre_eval(state.label.radial_index, -state.exponent, r2);
}

WaveFn wavefunction_of(const OscillatorState& state) {
    OscillatorState copy = state;
    return [copy](Complex r) { return wavefunction(copy, r); };
}

OscillatorState normalize(const OscillatorState& state, const PtContour& contour) {
    WaveFn psi = wavefunction_of(state);
    Complex s = pseudo_product(psi, psi, contour);
    if (std::abs(s) < 1e-10) {
        throw Error(ErrorKind::ZeroPseudoNorm,
                    "self pseudo-product vanishes; normalize the pair instead");
    }
    // Pick the contour node where the state is largest and read off the PT
    // phase there: conj(psi(-conj r0)) = eps * psi(r0) with |eps| = 1.
    Complex r0 = contour.point(contour.ts[0]);
    double best = -1.0;
    for (double t : contour.ts) {
        Complex r = contour.point(t);
        double a = std::abs(psi(r));
        if (a > best) {
            best = a;
            r0 = r;
        }
    }
    Complex eps = std::conj(psi(-std::conj(r0))) / psi(r0);
    Complex a = std::exp(Complex(0.0, 0.5 * std::arg(eps))) / std::sqrt(std::abs(s));
    Complex nc = a * state.norm_const;
    // A global sign leaves both the self-product and the PT phase alone;
    // spend it to pin arg(norm_const) into [0, pi).
    double ph = std::arg(nc);
    if (!(ph >= 0.0 && ph < M_PI)) {
        nc = -nc;
    }
    OscillatorState out = state;
    out.norm_const = nc;
    return out;
}

} // namespace ptnorm
