#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ptnorm/error.hpp"

namespace ptnorm {

using Complex = std::complex<double>;

/// Gauss-Legendre rule on [-1, 1]: weights are positive and sum to 2, nodes
/// are strictly increasing, and polynomials of degree <= 2*order - 1 are
/// integrated exactly.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

/// Sign-change interval handed to find_root_1d. Callers must supply the
/// function values at both ends; f_lo * f_hi < 0 is required.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

/// Evaluate f at both ends and package the bracket.
Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi);

QuadratureRule gauss_legendre(int m);

/// Generalized Laguerre polynomial L_n^(a)(z) by the ascending three-term
/// recurrence. The superscript may be complex (needed when the exponent is
/// imaginary). Exact for the polynomial degrees used here (n <= 32).
Complex laguerre_eval(int n, Complex a, Complex z);

/// Brent-style bracketed root finder: bisection-safe with inverse-quadratic
/// acceleration. Throws NoSignChange for an invalid bracket and MaxIterations
/// if the interval cannot be shrunk to tol within the budget.
double find_root_1d(const std::function<double(double)>& f, const Bracket& bracket,
                    double tol = 1e-13, int max_iter = 200);

struct NewtonResult {
    Complex z;
    int iterations = 0;
};

/// Newton iteration for analytic F with the derivative approximated by a
/// central finite difference of step 1e-6 * (1 + |z|). Stops when
/// |F(z)| <= tol. Throws Diverged if the iterate leaves |z - z0| <= radius
/// or becomes non-finite, MaxIterations otherwise.
NewtonResult newton_complex(const std::function<Complex(Complex)>& F, Complex z0,
                            double tol = 1e-10, int max_iter = 100, double radius = 1e3);

} // namespace ptnorm
