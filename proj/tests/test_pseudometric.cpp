#include <cmath>

#include "doctest.h"
#include "ptnorm/oscillator.hpp"
#include "ptnorm/pseudometric.hpp"
#include "ptnorm/squarewell.hpp"
#include "test_util.hpp"

using namespace ptnorm;
using test_util::thrown_kind;

namespace {

const double kPi = 3.14159265358979323846;

std::vector<WaveFn> normalized_family(double g, int n_max, const PtContour& contour) {
    std::vector<WaveFn> out;
    for (const auto& s : spectrum(OscillatorParams{g, 1.0}, n_max)) {
        out.push_back(wavefunction_of(normalize(s, contour)));
    }
    return out;
}

} // namespace

TEST_SUITE("pseudometric") {

TEST_CASE("contour grid structure") {
    PtContour c = oscillator_contour();
    CHECK(c.size() == 800);
    CHECK(c.delta == 1.0);
    CHECK(c.half_length == 8.0);
    double wsum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) CHECK(c.ts[i] > c.ts[i - 1]);
        CHECK(c.weights[i] > 0.0);
        wsum += c.weights[i];
        CHECK(c.ts[i] == -c.ts[c.size() - 1 - i]); // symmetric grid, exactly
    }
    CHECK(std::abs(wsum - 16.0) < 1e-12);
    CHECK(c.point(0.5) == Complex(0.5, -1.0));

    PtContour sw = squarewell_contour();
    CHECK(sw.delta == 0.0);
    CHECK(sw.half_length == 1.0);
    CHECK(sw.size() == 400);

    CHECK(thrown_kind([] { PtContour(-1.0, 8.0); }) == ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { PtContour(1.0, 0.0); }) == ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { PtContour(1.0, 8.0, 0); }) == ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { PtContour(1.0, 8.0, 4, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("pseudo_product is sesquilinear and conjugate-symmetric") {
    PtContour c = oscillator_contour();
    auto s0 = make_state(OscillatorParams{0.3, 1.0}, +1, 0);
    WaveFn phi = wavefunction_of(s0);
    WaveFn psi = [](Complex r) { return std::exp(-0.45 * r * r); };
    Complex a{0.7, -0.3}, b{-1.2, 0.4};
    WaveFn aphi = [=](Complex r) { return a * phi(r); };
    WaveFn bpsi = [=](Complex r) { return b * psi(r); };

    Complex base = pseudo_product(phi, psi, c);
    CHECK(std::abs(base) > 0.1); // a meaningful overlap, not orthogonality noise
    Complex scaled = pseudo_product(aphi, bpsi, c);
    CHECK(std::abs(scaled - std::conj(a) * b * base) < 1e-12 * std::abs(scaled));

    Complex fwd = pseudo_product(phi, psi, c);
    Complex rev = pseudo_product(psi, phi, c);
    CHECK(std::abs(fwd - std::conj(rev)) < 1e-12 * std::max(1.0, std::abs(fwd)));
}

TEST_CASE("real contour reduces to the parity-weighted product") {
    // <sin pi(x+1)/sqrt norm | P | same> = -1: odd function about the center.
    PtContour sw = squarewell_contour();
    WaveFn f = [](Complex r) { return std::sin(kPi * (r + 1.0)); };
    Complex self = pseudo_product(f, f, sw);
    CHECK(std::abs(self - Complex(-1.0, 0.0)) < 1e-12);
    double l2 = norm_product(f, sw);
    CHECK(std::abs(l2 - 1.0) < 1e-12);
    CHECK(max_abs_on_contour(f, sw) > 0.99);
    CHECK(max_abs_on_contour(f, sw) <= 1.0);
}

TEST_CASE("truncation guard fires on slowly decaying functions") {
    PtContour c = oscillator_contour();
    WaveFn wide = [](Complex r) { return std::exp(-r * r / 50.0); };
    CHECK(thrown_kind([&] { pseudo_product(wide, wide, c); }) ==
          ErrorKind::TruncationTooTight);
    // Loosening the bound admits it again.
    CHECK_NOTHROW(pseudo_product(wide, wide, c, 10.0));
}

TEST_CASE("guard checks the contour ends, not the nearest quadrature node") {
    // Square-well eigenfunctions vanish exactly at the walls. Scaling them by
    // 1e6 makes the integrand large at the outermost interior node but still
    // zero at the ends; the guard must not fire.
    PtContour sw = squarewell_contour();
    RealLevels rl = real_levels(SquareWellParams{1.0}, 0);
    const auto lvl = rl.levels[0];
    WaveFn big = [lvl](Complex r) { return 1e6 * wavefunction(lvl, r.real()); };
    CHECK_NOTHROW(pseudo_product(big, big, sw));
}

TEST_CASE("gram of normalized unbroken states is the quasi-parity diagonal") {
    PtContour c = oscillator_contour();
    auto states = normalized_family(0.3, 1, c);
    std::vector<std::string> labels{"N=0", "N=1", "N=2", "N=3"};
    GramMatrix G = gram(states, labels, c);
    CHECK(G.size == 4);
    CHECK(G.classification == GramClass::UnbrokenDiagonal);
    CHECK(std::string(to_string(G.classification)) == "unbroken-diagonal");
    for (std::size_t i = 0; i < 4; ++i) {
        double want = (i % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(G.at(i, i) - Complex(want, 0.0)) < 1e-8);
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j) CHECK(std::abs(G.at(i, j)) < 1e-8);
        }
    }
    CHECK(G.labels == labels);
}

TEST_CASE("gram of a broken family classifies as pair blocks") {
    PtContour c = oscillator_contour();
    std::vector<WaveFn> states;
    std::vector<std::string> labels;
    for (int n : {0, 1}) {
        BrokenPair p;
        p.psi_plus = wavefunction_of(make_state(OscillatorParams{-0.5, 1.0}, -1, n));
        p.psi_minus = wavefunction_of(make_state(OscillatorParams{-0.5, 1.0}, +1, n));
        p.cross_norm = pseudo_product(p.psi_plus, p.psi_minus, c);
        BrokenPair np = normalize_pair(p, c);
        states.push_back(np.psi_plus);
        states.push_back(np.psi_minus);
        labels.push_back("pair " + std::to_string(n) + " +");
        labels.push_back("pair " + std::to_string(n) + " -");
    }
    GramMatrix G = gram(states, labels, c);
    CHECK(G.classification == GramClass::BrokenBlock);
    CHECK(std::string(to_string(G.classification)) == "broken-block");
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(G.at(i, i)) < 1e-8);
    }
    CHECK(std::abs(G.at(0, 1) - Complex(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(G.at(1, 0) - Complex(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(G.at(2, 3) - Complex(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(G.at(0, 2)) < 1e-8);
    CHECK(std::abs(G.at(1, 3)) < 1e-8);
}

TEST_CASE("gram flags scaled states as inconsistent") {
    PtContour c = oscillator_contour();
    auto states = normalized_family(0.3, 0, c);
    WaveFn half = [f = states[0]](Complex r) { return 0.5 * f(r); };
    GramMatrix G = gram({states[0], half}, {"a", "b"}, c);
    CHECK(G.classification == GramClass::Inconsistent);
    CHECK(std::string(to_string(G.classification)) == "inconsistent");

    CHECK(thrown_kind([&] { gram(states, {"only-one"}, c); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("normalize_pair makes the cross product exactly one") {
    PtContour c = oscillator_contour();
    BrokenPair p;
    p.psi_plus = wavefunction_of(make_state(OscillatorParams{-0.5, 1.0}, -1, 0));
    p.psi_minus = wavefunction_of(make_state(OscillatorParams{-0.5, 1.0}, +1, 0));
    p.energy = make_state(OscillatorParams{-0.5, 1.0}, -1, 0).energy;
    p.cross_norm = pseudo_product(p.psi_plus, p.psi_minus, c);
    Complex frozen{-0.4594307102951013, 1.844937745572778};
    CHECK(std::abs(p.cross_norm - frozen) < 1e-9);

    BrokenPair np = normalize_pair(p, c);
    CHECK(std::abs(np.cross_norm - Complex(1.0, 0.0)) < 1e-10);
    Complex c12 = pseudo_product(np.psi_plus, np.psi_minus, c);
    Complex c21 = pseudo_product(np.psi_minus, np.psi_plus, c);
    CHECK(std::abs(c12 - Complex(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(c21 - Complex(1.0, 0.0)) < 1e-10);

    BrokenPair degen = p;
    degen.psi_minus = p.psi_plus; // self pairing: cross product is the zero self-overlap
    degen.cross_norm = pseudo_product(degen.psi_plus, degen.psi_minus, c);
    CHECK(thrown_kind([&] { normalize_pair(degen, c); }) == ErrorKind::DegeneratePair);

    BrokenPair fake;
    fake.psi_plus = wavefunction_of(normalize(make_state(OscillatorParams{0.3, 1.0}, +1, 0), c));
    fake.psi_minus = wavefunction_of(normalize(make_state(OscillatorParams{0.3, 1.0}, -1, 0), c));
    fake.cross_norm = pseudo_product(fake.psi_plus, fake.psi_minus, c);
    // Cross product of distinct unbroken states is ~0, so this reports a
    // degenerate pair rather than silently dividing by noise.
    CHECK(thrown_kind([&] { normalize_pair(fake, c); }) == ErrorKind::DegeneratePair);
}

TEST_CASE("pseudo products are stable under the contour shift") {
    PtContour a = oscillator_contour(0.5, 8.0);
    PtContour b = oscillator_contour(1.0, 8.0);
    auto mk = [](double delta) {
        return spectrum(OscillatorParams{0.3, delta}, 1);
    };
    auto sa = mk(0.5), sb = mk(1.0);
    for (int N = 0; N < 4; ++N) {
        Complex pa = pseudo_product(wavefunction_of(sa[N]), wavefunction_of(sa[N]), a);
        Complex pb = pseudo_product(wavefunction_of(sb[N]), wavefunction_of(sb[N]), b);
        CHECK(std::abs(pa - pb) < 1e-8);
    }
    // A longer contour with more panels agrees too.
    PtContour wide = PtContour(1.0, 10.0, 20, 50);
    for (int N = 0; N < 4; ++N) {
        Complex pb = pseudo_product(wavefunction_of(sb[N]), wavefunction_of(sb[N]), b);
        Complex pw = pseudo_product(wavefunction_of(sb[N]), wavefunction_of(sb[N]), wide);
        CHECK(std::abs(pb - pw) < 1e-9);
    }
}

TEST_CASE("completeness defect shrinks as the basis grows") {
    PtContour c = PtContour(1.0, 12.0, 24, 50);
    std::vector<Complex> grid;
    for (int i = 0; i <= 80; ++i) grid.push_back(Complex(-4.0 + 0.1 * i, -1.0));
    WaveFn f = [](Complex r) { return std::exp(-0.35 * r * r); };

    auto basis_of = [&](int M) {
        std::vector<ProjectorTerm> basis;
        for (const auto& s : spectrum(OscillatorParams{0.0, 1.0}, (M - 1) / 2)) {
            if ((int)basis.size() == M) break;
            auto ns = normalize(s, c);
            ProjectorTerm term;
            term.ket = wavefunction_of(ns);
            term.bra = term.ket;
            double sign = (ns.label.level_index % 2 == 0) ? 1.0 : -1.0;
            term.weight = Complex(sign, 0.0);
            basis.push_back(term);
        }
        return basis;
    };

    double d4 = completeness_defect(basis_of(4), c, f, grid);
    double d8 = completeness_defect(basis_of(8), c, f, grid);
    double d16 = completeness_defect(basis_of(16), c, f, grid);
    CHECK(d4 > d8);
    CHECK(d8 > d16);
    CHECK(d16 < 1e-3);

    // A basis member itself reconstructs to roundoff with a small basis.
    auto basis = basis_of(6);
    WaveFn member = basis[3].ket;
    CHECK(completeness_defect(basis, c, member, grid) < 1e-7);
}

} // TEST_SUITE
