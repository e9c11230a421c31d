#include "ptnorm/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ptnorm {

std::vector<Complex> EvolvedState::coeffs() const {
    std::vector<Complex> a(coeffs0.size());
    for (std::size_t n = 0; n < coeffs0.size(); ++n) {
        // -i E t has real part Im(E) t, so pair members grow or decay.
        a[n] = coeffs0[n] * std::exp(Complex(0.0, -time) * basis.modes[n].energy);
    }
    return a;
}

WaveFn EvolvedState::reconstruct() const {
    std::vector<Complex> a = coeffs();
    std::vector<WaveFn> kets;
    kets.reserve(basis.modes.size());
    for (const Mode& m : basis.modes) {
        kets.push_back(m.proj.ket);
    }
    return [kets, a](Complex r) {
        Complex sum{0.0, 0.0};
        for (std::size_t n = 0; n < kets.size(); ++n) {
            sum += a[n] * kets[n](r);
        }
        return sum;
    };
}

EvolvedState decompose(const WaveFn& psi0, const SpectralDecomposition& basis,
                       const PtContour& contour, double recon_tol) {
    EvolvedState st;
    st.basis = basis;
    st.time = 0.0;
    st.coeffs0.resize(basis.modes.size());
    for (std::size_t n = 0; n < basis.modes.size(); ++n) {
        const ProjectorTerm& p = basis.modes[n].proj;
        st.coeffs0[n] = p.weight * pseudo_product(p.bra, psi0, contour);
    }
    double defect = 0.0;
    for (double t : contour.ts) {
        Complex r = contour.point(t);
        Complex rec{0.0, 0.0};
        for (std::size_t n = 0; n < basis.modes.size(); ++n) {
            rec += st.coeffs0[n] * basis.modes[n].proj.ket(r);
        }
        defect = std::max(defect, std::abs(rec - psi0(r)));
    }
    if (defect > recon_tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "reconstruction defect %.3e exceeds %.3e; state outside truncated span",
                      defect, recon_tol);
        throw Error(ErrorKind::PoorReconstruction, buf);
    }
    st.reconstruction_defect = defect;
    WaveFn rec = st.reconstruct();
    st.initial_pseudo_norm = pseudo_product(rec, rec, contour);
    return st;
}

EvolvedState evolve(const EvolvedState& state, double t) {
    double new_time = state.time + t;
    for (const Mode& m : state.basis.modes) {
        if (std::abs(m.energy.imag()) * std::abs(new_time) > 690.0) {
            throw Error(ErrorKind::OverflowGuard,
                        "|Im E| * t too large; amplitudes would overflow");
        }
    }
    EvolvedState out = state;
    out.time = new_time;
    return out;
}

std::vector<NormTraceRow> pseudo_norm_trace(const WaveFn& psi0, const SpectralDecomposition& basis,
                                            const std::vector<double>& times,
                                            const PtContour& contour, double recon_tol) {
    EvolvedState base = decompose(psi0, basis, contour, recon_tol);
    std::vector<NormTraceRow> rows;
    rows.reserve(times.size());
    for (double t : times) {
        EvolvedState st = evolve(base, t);
        WaveFn f = st.reconstruct();
        NormTraceRow row;
        row.t = t;
        row.pseudo_norm = pseudo_product(f, f, contour);
        row.ordinary_norm = norm_product(f, contour);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Complex> grid_oracle(const SquareWellParams& params, const std::vector<Complex>& psi0,
                                 double t, int steps) {
    if (params.t2 < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "T^2 must be >= 0");
    }
    const int m = int(psi0.size());
    if (m < 400) {
        throw Error(ErrorKind::InvalidArgument, "grid oracle needs at least 400 interior points");
    }
    if (steps < 1) {
        throw Error(ErrorKind::InvalidArgument, "steps must be >= 1");
    }
    const double h = 2.0 / (m + 1);
    const double dt = t / steps;
    const Complex half_idt{0.0, 0.5 * dt};
    std::vector<Complex> diag_a(m), diag_b(m);
    for (int j = 0; j < m; ++j) {
        double x = -1.0 + (j + 1) * h;
        double s = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
        Complex hjj{2.0 / (h * h), -params.t2 * s};
        diag_a[j] = 1.0 + half_idt * hjj;
        diag_b[j] = 1.0 - half_idt * hjj;
    }
    const Complex off_h{-1.0 / (h * h), 0.0};
    const Complex off_a = half_idt * off_h;
    const Complex off_b = -half_idt * off_h;

    std::vector<Complex> v = psi0, rhs(m), cp(m > 1 ? m - 1 : 0), dp(m);
    for (int k = 0; k < steps; ++k) {
        for (int j = 0; j < m; ++j) {
            Complex s = diag_b[j] * v[j];
            if (j > 0) {
                s += off_b * v[j - 1];
            }
            if (j + 1 < m) {
                s += off_b * v[j + 1];
            }
            rhs[j] = s;
        }
        Complex beta = diag_a[0];
        if (std::abs(beta) < 1e-300) {
            throw Error(ErrorKind::LinearSolveFailure, "zero pivot in tridiagonal solve");
        }
        dp[0] = rhs[0] / beta;
        for (int j = 1; j < m; ++j) {
            cp[j - 1] = off_a / beta;
            beta = diag_a[j] - off_a * cp[j - 1];
            if (std::abs(beta) < 1e-300) {
                throw Error(ErrorKind::LinearSolveFailure, "zero pivot in tridiagonal solve");
            }
            dp[j] = (rhs[j] - off_a * dp[j - 1]) / beta;
        }
        v[m - 1] = dp[m - 1];
        for (int j = m - 2; j >= 0; --j) {
            v[j] = dp[j] - cp[j] * v[j + 1];
        }
    }
    return v;
}

Complex grid_pseudo_norm(const std::vector<Complex>& psi) {
    const std::size_t m = psi.size();
    const double h = 2.0 / double(m + 1);
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        // The interior grid is symmetric: x_{m-1-j} = -x_j.
        sum += std::conj(psi[m - 1 - j]) * psi[j] * h;
    }
    return sum;
}

namespace {

Mode unbroken_mode(WaveFn w, Complex sign, Complex energy, std::string name) {
    Mode m;
    m.proj.ket = w;
    m.proj.bra = std::move(w);
    m.proj.weight = sign;
    m.energy = energy;
    m.name = std::move(name);
    return m;
}

void append_pair_modes(std::vector<Mode>& modes, const BrokenPair& np, Complex energy_plus,
                       const std::string& stem) {
    Mode plus;
    plus.proj.ket = np.psi_plus;
    plus.proj.bra = np.psi_minus;
    plus.proj.weight = Complex(1.0, 0.0);
    plus.energy = energy_plus;
    plus.name = stem + "+";
    Mode minus;
    minus.proj.ket = np.psi_minus;
    minus.proj.bra = np.psi_plus;
    minus.proj.weight = Complex(1.0, 0.0);
    minus.energy = std::conj(energy_plus);
    minus.name = stem + "-";
    modes.push_back(std::move(plus));
    modes.push_back(std::move(minus));
}

} // namespace

SpectralDecomposition oscillator_basis(const OscillatorParams& params, int M,
                                       const PtContour& contour) {
    if (M < 1) {
        throw Error(ErrorKind::InvalidArgument, "truncation must be >= 1");
    }
    SpectralDecomposition dec;
    dec.truncation = M;
    if (params.g == -0.25) {
        make_state(params, +1, 0); // throws ExceptionalCoupling
    }
    if (params.g > -0.25) {
        std::vector<OscillatorState> states = spectrum(params, (M - 1) / 2);
        states.resize(M);
        for (const OscillatorState& st : states) {
            OscillatorState ns = normalize(st, contour);
            WaveFn w = wavefunction_of(ns);
            Complex s = pseudo_product(w, w, contour);
            Complex sign{s.real() >= 0.0 ? 1.0 : -1.0, 0.0};
            dec.modes.push_back(unbroken_mode(std::move(w), sign, ns.energy,
                                              "N=" + std::to_string(ns.label.level_index) +
                                                  " n=" + std::to_string(ns.label.radial_index)));
        }
    } else {
        if (M % 2 != 0) {
            throw Error(ErrorKind::InvalidArgument,
                        "broken-regime truncation must be even (whole pairs)");
        }
        for (int n = 0; n < M / 2; ++n) {
            OscillatorState plus = make_state(params, -1, n); // Im E > 0 member
            OscillatorState minus = make_state(params, +1, n);
            BrokenPair pair;
            pair.psi_plus = wavefunction_of(plus);
            pair.psi_minus = wavefunction_of(minus);
            pair.energy = plus.energy;
            BrokenPair np = normalize_pair(pair, contour);
            append_pair_modes(dec.modes, np, plus.energy, "n=" + std::to_string(n) + " pair");
        }
    }
    return dec;
}

SpectralDecomposition squarewell_basis(const SquareWellParams& params, int n_max,
                                       const PtContour& contour) {
    if (contour.delta != 0.0) {
        throw Error(ErrorKind::InvalidArgument,
                    "square-well states live on the real interval; use squarewell_contour()");
    }
    RealLevels rl = real_levels(params, n_max);
    SpectralDecomposition dec;
    for (const SquareWellLevel& lvl : rl.levels) {
        WaveFn raw = [lvl](Complex r) { return wavefunction(lvl, r.real()); };
        Complex s = pseudo_product(raw, raw, contour);
        if (std::abs(s) < 1e-10) {
            throw Error(ErrorKind::ExceptionalCoupling,
                        "level at the critical coupling has vanishing pseudo-norm");
        }
        double scale = 1.0 / std::sqrt(std::abs(s));
        WaveFn w = [lvl, scale](Complex r) { return scale * wavefunction(lvl, r.real()); };
        Complex sign{s.real() >= 0.0 ? 1.0 : -1.0, 0.0};
        dec.modes.push_back(unbroken_mode(std::move(w), sign, lvl.energy,
                                          "N=" + std::to_string(lvl.level_index)));
    }
    for (int oval : rl.exhausted_ovals) {
        std::pair<SquareWellLevel, SquareWellLevel> pr = broken_pair(params, oval);
        const SquareWellLevel lp = pr.first;
        const SquareWellLevel lm = pr.second;
        BrokenPair pair;
        pair.psi_plus = [lp](Complex r) { return wavefunction(lp, r.real()); };
        pair.psi_minus = [lm](Complex r) { return wavefunction(lm, r.real()); };
        pair.energy = lp.energy;
        BrokenPair np = normalize_pair(pair, contour);
        append_pair_modes(dec.modes, np, lp.energy, "oval " + std::to_string(oval) + " pair");
    }
    std::stable_sort(dec.modes.begin(), dec.modes.end(),
                     [](const Mode& a, const Mode& b) { return a.energy.real() < b.energy.real(); });
    dec.truncation = int(dec.modes.size());
    return dec;
}

GramMatrix oscillator_gram(const OscillatorParams& params, int M, const PtContour& contour,
                           double tol) {
    SpectralDecomposition dec = oscillator_basis(params, M, contour);
    std::vector<WaveFn> kets;
    std::vector<std::string> labels;
    for (const Mode& m : dec.modes) {
        kets.push_back(m.proj.ket);
        labels.push_back(m.name);
    }
    return gram(kets, labels, contour, tol);
}

GramMatrix squarewell_gram(const SquareWellParams& params, int M, const PtContour& contour,
                           double tol) {
    if (M < 1) {
        throw Error(ErrorKind::InvalidArgument, "truncation must be >= 1");
    }
    SpectralDecomposition dec = squarewell_basis(params, (M - 1) / 2, contour);
    std::vector<WaveFn> kets;
    std::vector<std::string> labels;
    for (const Mode& m : dec.modes) {
        kets.push_back(m.proj.ket);
        labels.push_back(m.name);
    }
    if (kets.size() > std::size_t(M)) {
        kets.resize(M);
        labels.resize(M);
    }
    return gram(kets, labels, contour, tol);
}

} // namespace ptnorm
