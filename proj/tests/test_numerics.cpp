#include <cmath>

#include "doctest.h"
#include "ptnorm/numerics.hpp"
#include "test_util.hpp"

using namespace ptnorm;
using test_util::thrown_kind;

TEST_SUITE("numerics") {

TEST_CASE("gauss_legendre integrates monomials exactly") {
    QuadratureRule r16 = gauss_legendre(16);
    double x30 = 0.0, x31 = 0.0;
    for (int i = 0; i < 16; ++i) {
        x30 += r16.weights[i] * std::pow(r16.nodes[i], 30);
        x31 += r16.weights[i] * std::pow(r16.nodes[i], 31);
    }
    CHECK(std::abs(x30 - 2.0 / 31.0) < 1e-15);
    CHECK(std::abs(x31) < 1e-15);

    QuadratureRule r5 = gauss_legendre(5);
    double x8 = 0.0, x9 = 0.0;
    for (int i = 0; i < 5; ++i) {
        x8 += r5.weights[i] * std::pow(r5.nodes[i], 8);
        x9 += r5.weights[i] * std::pow(r5.nodes[i], 9);
    }
    CHECK(std::abs(x8 - 2.0 / 9.0) < 1e-15);
    CHECK(std::abs(x9) < 1e-15);
}

TEST_CASE("gauss_legendre rule structure") {
    QuadratureRule r = gauss_legendre(50);
    double wsum = 0.0;
    for (int i = 0; i < 50; ++i) {
        wsum += r.weights[i];
        CHECK(r.weights[i] > 0.0);
        if (i > 0) {
            CHECK(r.nodes[i] > r.nodes[i - 1]);
        }
        CHECK(r.nodes[i] == -r.nodes[50 - 1 - i]);
    }
    CHECK(std::abs(wsum - 2.0) < 1e-13);

    QuadratureRule odd = gauss_legendre(7);
    CHECK(odd.nodes[3] == 0.0);

    QuadratureRule one = gauss_legendre(1);
    CHECK(one.nodes[0] == 0.0);
    CHECK(std::abs(one.weights[0] - 2.0) < 1e-15);

    CHECK(thrown_kind([] { gauss_legendre(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("laguerre values and recurrence") {
    CHECK(std::abs(laguerre_eval(0, Complex(0.7, -0.3), Complex(2.0, 1.0)) - 1.0) < 1e-15);

    Complex a{0.5, 0.0};
    CHECK(std::abs(laguerre_eval(2, a, Complex(1.0, 0.0)) - Complex(-0.125, 0.0)) < 1e-14);

    Complex ac{0.3, -0.7}, z{1.2, 0.4};
    Complex l1 = laguerre_eval(1, ac, z);
    CHECK(std::abs(l1 - (1.0 + ac - z)) < 1e-14);

    // Three-term recurrence residual at n = 6.
    int n = 6;
    Complex ln = laguerre_eval(n, ac, z);
    Complex lm = laguerre_eval(n - 1, ac, z);
    Complex lp = laguerre_eval(n + 1, ac, z);
    Complex res = double(n + 1) * lp - ((2.0 * n + 1.0) + ac - z) * ln + (double(n) + ac) * lm;
    CHECK(std::abs(res) < 1e-12 * std::abs(ln));

    CHECK(thrown_kind([] { laguerre_eval(-1, Complex(0, 0), Complex(0, 0)); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("find_root_1d locates bracketed roots") {
    auto f = [](double x) { return std::cos(x); };
    double root = find_root_1d(f, make_bracket(f, 1.0, 2.0));
    CHECK(std::abs(root - 1.5707963267948966) < 1e-13);

    // q sinh 2q = 1, the oval equation's left side at fixed right side.
    auto g = [](double q) { return q * std::sinh(2.0 * q) - 1.0; };
    double q = find_root_1d(g, make_bracket(g, 0.1, 1.0));
    CHECK(std::abs(q - 0.6246971683231622) < 1e-12);
}

TEST_CASE("find_root_1d error paths") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK(thrown_kind([&] { find_root_1d(f, make_bracket(f, 0.0, 1.0)); }) ==
          ErrorKind::NoSignChange);

    auto g = [](double x) { return std::cos(x); };
    CHECK(thrown_kind([&] { find_root_1d(g, make_bracket(g, 1.0, 2.0), 1e-13, 2); }) ==
          ErrorKind::MaxIterations);
}

TEST_CASE("newton_complex finds roots and mirrors conjugate seeds") {
    auto F = [](Complex z) { return z * z + 1.0; };
    NewtonResult up = newton_complex(F, Complex(0.5, 0.5));
    CHECK(std::abs(up.z - Complex(0.0, 1.0)) < 1e-9);
    CHECK(up.iterations > 0);

    // The finite-difference Newton step commutes with conjugation, so a
    // conjugate seed must land on the bit-exact conjugate root.
    NewtonResult down = newton_complex(F, Complex(0.5, -0.5));
    CHECK(down.z.real() == up.z.real());
    CHECK(down.z.imag() == -up.z.imag());
}

TEST_CASE("newton_complex error paths") {
    // No zero anywhere: the flat function makes the step blow up.
    auto flat = [](Complex) { return Complex(1.0, 0.0); };
    CHECK(thrown_kind([&] { newton_complex(flat, Complex(0.0, 0.0)); }) == ErrorKind::Diverged);

    // Trust region: root at +-i but the radius forbids leaving the seed.
    auto F = [](Complex z) { return z * z + 1.0; };
    CHECK(thrown_kind([&] { newton_complex(F, Complex(100.0, 100.0), 1e-10, 100, 1.0); }) ==
          ErrorKind::Diverged);

    CHECK(thrown_kind([&] { newton_complex(F, Complex(0.5, 0.5), 1e-30, 3); }) ==
          ErrorKind::MaxIterations);
}

} // TEST_SUITE
