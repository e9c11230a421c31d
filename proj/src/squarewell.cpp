#include "ptnorm/squarewell.hpp"

#include <algorithm>
#include <cmath>

namespace ptnorm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double oval_lo(int n) { return (2 * n + 1) * kPi / 2.0; }
double oval_hi(int n) { return (2 * n + 2) * kPi / 2.0; }

// C from continuity (-sin l / sin k) where that ratio is well conditioned,
// from derivative matching otherwise. At the odd Hermitian levels both sines
// vanish and only the derivative form has a finite limit.
Complex match_coefficient(Complex lambda, Complex kappa) {
    Complex sk = std::sin(kappa);
    if (std::abs(sk) > 1e-6 * (1.0 + std::abs(kappa))) {
        return -std::sin(lambda) / sk;
    }
    return lambda * std::cos(lambda) / (kappa * std::cos(kappa));
}

SquareWellLevel make_real_level(double p, double q, double t2) {
    SquareWellLevel level;
    level.lambda = Complex(p, -q);
    level.kappa = Complex(p, q);
    level.energy = Complex(p * p - q * q, 0.0);
    level.match_coeff = match_coefficient(level.lambda, level.kappa);
    level.broken = false;
    (void)t2;
    return level;
}

SquareWellLevel make_complex_level(Complex energy, double t2) {
    SquareWellLevel level;
    level.energy = energy;
    level.lambda = std::sqrt(energy - Complex(0.0, t2));
    level.kappa = std::sqrt(energy + Complex(0.0, t2));
    level.match_coeff = match_coefficient(level.lambda, level.kappa);
    level.broken = true;
    return level;
}

// Maximum of f over [lo, hi] by golden-section refinement of the best coarse
// grid point.
std::pair<double, double> maximize(const std::function<double(double)>& f, double lo, double hi,
                                   int coarse_points) {
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i < coarse_points; ++i) {
        double x = lo + (hi - lo) * i / (coarse_points - 1.0);
        double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double step = (hi - lo) / (coarse_points - 1.0);
    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int iter = 0; iter < 200 && (b - a) > 1e-13 * (1.0 + std::abs(b)); ++iter) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    double x = 0.5 * (a + b);
    return {x, f(x)};
}

} // namespace

double oval_branch(int n, double p) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "oval index must be >= 0");
    }
    const double lo = oval_lo(n), hi = oval_hi(n);
    const double slack = 1e-12 * hi;
    if (p < lo - slack || p > hi + slack) {
        throw Error(ErrorKind::OutOfOvalRange, "p outside ((2n+1)pi/2, (2n+2)pi/2)");
    }
    p = std::clamp(p, lo, hi);
    double rhs = -p * std::sin(2.0 * p); // >= 0 on the oval interval
    if (rhs <= 0.0) {
        return 0.0; // endpoint (sin 2p = 0), q vanishes exactly
    }
    auto f = [rhs](double q) { return q * std::sinh(2.0 * q) - rhs; };
    double q_hi = 1.0;
    while (f(q_hi) < 0.0) {
        q_hi *= 2.0;
        if (q_hi > 64.0) {
            throw Error(ErrorKind::Diverged, "oval equation has no reachable root");
        }
    }
    return find_root_1d(f, make_bracket(f, 0.0, q_hi), 1e-14);
}

Complex matching_residual(Complex energy, double t2) {
    Complex lambda = std::sqrt(energy - Complex(0.0, t2));
    Complex kappa = std::sqrt(energy + Complex(0.0, t2));
    return lambda * std::cos(lambda) / std::sin(lambda) +
           kappa * std::cos(kappa) / std::sin(kappa);
}

CriticalCoupling critical_coupling(int n) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "oval index must be >= 0");
    }
    const double lo = oval_lo(n), hi = oval_hi(n);
    auto objective = [n](double p) { return 2.0 * p * oval_branch(n, p); };
    auto [p_star, t2_crit] = maximize(objective, lo, hi, 400);
    CriticalCoupling crit;
    crit.oval_index = n;
    crit.t2_crit = t2_crit;
    crit.merge_point = OvalPoint{p_star, oval_branch(n, p_star)};
    return crit;
}

RealLevels real_levels(const SquareWellParams& params, int n_max) {
    if (params.t2 < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "t2 must be >= 0");
    }
    if (n_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
    }
    RealLevels result;
    const double t2 = params.t2;

    if (t2 == 0.0) {
        // Hermitian well: E_N = (N+1)^2 pi^2 / 4 exactly.
        for (int N = 0; N <= 2 * n_max + 1; ++N) {
            double p = (N + 1) * kPi / 2.0;
            SquareWellLevel level = make_real_level(p, 0.0, 0.0);
            level.energy = Complex(p * p, 0.0);
            level.level_index = N;
            level.quasi_parity = (N % 2 == 0) ? +1 : -1;
            result.levels.push_back(level);
        }
        return result;
    }

    for (int n = 0; n <= n_max; ++n) {
        CriticalCoupling crit = critical_coupling(n);
        const double tie_tol = 1e-9 * std::max(1.0, crit.t2_crit);
        if (std::abs(t2 - crit.t2_crit) <= tie_tol) {
            // Tangency: the two levels coincide at the merge point.
            SquareWellLevel level = make_real_level(crit.merge_point.p, crit.merge_point.q, t2);
            level.exceptional = true;
            result.levels.push_back(level);
            continue;
        }
        if (t2 > crit.t2_crit) {
            result.exhausted_ovals.push_back(n);
            continue;
        }

        // Intersections of q_oval(p) with q = t2/(2p): the difference is
        // negative at both oval ends and positive at the apex.
        auto h = [n, t2](double p) { return oval_branch(n, p) - t2 / (2.0 * p); };
        const double lo = oval_lo(n), hi = oval_hi(n);
        const int grid = 512;
        std::vector<double> roots;
        double prev_p = lo + (hi - lo) * 1e-9;
        double prev_h = h(prev_p);
        for (int i = 1; i <= grid && roots.size() < 2; ++i) {
            double p = lo + (hi - lo) * (i == grid ? 1.0 - 1e-9 : double(i) / grid);
            double cur_h = h(p);
            if (prev_h == 0.0) {
                roots.push_back(prev_p);
            } else if (prev_h * cur_h < 0.0) {
                roots.push_back(find_root_1d(h, Bracket{prev_p, p, prev_h, cur_h}, 1e-13));
            }
            prev_p = p;
            prev_h = cur_h;
        }
        if (roots.size() < 2) {
            // Roots too close to the apex for the coarse grid: bracket each
            // side of the maximum, where h is positive.
            double pm = crit.merge_point.p;
            double hm = h(pm);
            if (hm <= 0.0) {
                throw Error(ErrorKind::Diverged, "level search inconsistent with critical coupling");
            }
            roots.clear();
            double la = lo + (hi - lo) * 1e-9;
            roots.push_back(find_root_1d(h, make_bracket(h, la, pm), 1e-13));
            double rb = hi - (hi - lo) * 1e-9;
            roots.push_back(find_root_1d(h, make_bracket(h, pm, rb), 1e-13));
        }
        for (double p : roots) {
            result.levels.push_back(make_real_level(p, t2 / (2.0 * p), t2));
        }
    }

    std::sort(result.levels.begin(), result.levels.end(),
              [](const SquareWellLevel& a, const SquareWellLevel& b) {
                  return a.energy.real() < b.energy.real();
              });
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
        result.levels[i].level_index = int(i);
        result.levels[i].quasi_parity = (i % 2 == 0) ? +1 : -1;
    }
    return result;
}

std::pair<SquareWellLevel, SquareWellLevel> broken_pair(const SquareWellParams& params, int n) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "oval index must be >= 0");
    }
    CriticalCoupling crit = critical_coupling(n);
    if (params.t2 <= crit.t2_crit) {
        throw Error(ErrorKind::NotBroken, "t2 below the critical coupling; use real_levels");
    }
    const double t2 = params.t2;
    auto F = [t2](Complex e) { return matching_residual(e, t2); };
    const double p = crit.merge_point.p, q = crit.merge_point.q;
    Complex seed(p * p - q * q, 0.1);

    Complex e1 = newton_complex(F, seed, 1e-12).z;
    Complex e2 = newton_complex(F, std::conj(seed), 1e-12).z;
    if (std::abs(e2 - std::conj(e1)) > 1e-8 * (1.0 + std::abs(e1))) {
        throw Error(ErrorKind::Diverged, "roots do not form a conjugate pair");
    }
    if (e1.imag() < 0.0) {
        std::swap(e1, e2);
    }
    SquareWellLevel plus = make_complex_level(e1, t2);
    SquareWellLevel minus = make_complex_level(e2, t2);
    plus.level_index = 2 * n;
    minus.level_index = 2 * n + 1;
    plus.quasi_parity = +1;
    minus.quasi_parity = -1;
    return {plus, minus};
}

Complex wavefunction(const SquareWellLevel& level, double x) {
    if (x <= 0.0) {
        return std::sin(level.lambda * (x + 1.0));
    }
    return level.match_coeff * std::sin(level.kappa * (x - 1.0));
}

} // namespace ptnorm
