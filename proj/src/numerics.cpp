#include "ptnorm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ptnorm {

Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi) {
    return Bracket{lo, hi, f(lo), f(hi)};
}

QuadratureRule gauss_legendre(int m) {
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "quadrature order must be >= 1");
    }
    QuadratureRule rule;
    rule.order = m;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    // Newton on the Legendre polynomial from the Chebyshev-like initial
    // guess; only the lower half is computed, the rest mirrored so the rule
    // is exactly symmetric.
    const double pi = 3.14159265358979323846;
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre value and derivative by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        // One clean evaluation at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x; // x descends from ~1 as i grows, so -x ascends
        rule.weights[i] = w;
        rule.nodes[m - 1 - i] = x;
        rule.weights[m - 1 - i] = w;
    }
    if (m % 2 == 1) {
        rule.nodes[m / 2] = 0.0;
    }
    return rule;
}

Complex laguerre_eval(int n, Complex a, Complex z) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "laguerre degree must be >= 0");
    }
    if (n == 0) {
        return {1.0, 0.0};
    }
    Complex lkm1{1.0, 0.0};
    Complex lk = 1.0 + a - z;
    for (int k = 1; k < n; ++k) {
        Complex lkp1 = ((2.0 * k + 1.0 + a - z) * lk - (double(k) + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double find_root_1d(const std::function<double(double)>& f, const Bracket& bracket, double tol,
                    int max_iter) {
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi;
    if (!(a < b)) {
        throw Error(ErrorKind::NoSignChange, "bracket ends not ordered");
    }
    if (fa == 0.0) {
        return a;
    }
    if (fb == 0.0) {
        return b;
    }
    if (fa * fb > 0.0) {
        throw Error(ErrorKind::NoSignChange, "bracket does not enclose a root");
    }

    // Brent: keep (a, b) bracketing, b the best iterate, c the previous one.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            return b;
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation (secant when a == c).
            double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc;
                double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw Error(ErrorKind::MaxIterations, "root not located to tolerance");
}

NewtonResult newton_complex(const std::function<Complex(Complex)>& F, Complex z0, double tol,
                            int max_iter, double radius) {
    Complex z = z0;
    for (int iter = 0; iter < max_iter; ++iter) {
        Complex fz = F(z);
        if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag())) {
            throw Error(ErrorKind::Diverged, "function value not finite");
        }
        if (std::abs(fz) <= tol) {
            return {z, iter};
        }
        double h = 1e-6 * (1.0 + std::abs(z));
        Complex df = (F(z + h) - F(z - h)) / (2.0 * h);
        Complex step = fz / df;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
            throw Error(ErrorKind::Diverged, "derivative vanished");
        }
        z -= step;
        if (std::abs(z - z0) > radius) {
            throw Error(ErrorKind::Diverged, "iterate left the trust region");
        }
    }
    throw Error(ErrorKind::MaxIterations, "newton iteration did not reach tolerance");
}

} // namespace ptnorm
