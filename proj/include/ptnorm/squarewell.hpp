#pragma once

#include <utility>
#include <vector>

#include "ptnorm/numerics.hpp"

namespace ptnorm {

/// Square well on [-1, 1] with Dirichlet ends and an antisymmetric imaginary
/// step of strength T^2: the potential is +iT^2 on the left half and -iT^2 on
/// the right half. Real spectrum below a critical coupling, complex-conjugate
/// pairs beyond it.
struct SquareWellParams {
    double t2 = 0.0; // T^2 >= 0, dimensionless
};

/// Point on oval n of the real-level construction: q >= 0 solves
/// q sinh 2q = -p sin 2p for p in ((2n+1)pi/2, (2n+2)pi/2).
struct OvalPoint {
    double p = 0.0;
    double q = 0.0;
};

/// One bound-state level. The two half-interval wavenumbers satisfy
/// lambda^2 = E - iT^2 and kappa^2 = E + iT^2; for real levels
/// lambda = p - iq with 2pq = T^2. match_coeff is the amplitude C of the
/// right-half branch C sin kappa(x-1).
struct SquareWellLevel {
    int level_index = 0;
    Complex energy{};
    Complex lambda{};
    Complex kappa{};
    Complex match_coeff{};
    int quasi_parity = +1; // (-1)^N on real levels; +1 marks the Im E > 0 pair member
    bool broken = false;
    bool exceptional = false; // two levels collapsed at the critical coupling
};

/// Real levels plus a diagnostic list of ovals that are past their critical
/// coupling at this T^2 and therefore contribute no real levels.
struct RealLevels {
    std::vector<SquareWellLevel> levels;
    std::vector<int> exhausted_ovals;
};

struct CriticalCoupling {
    int oval_index = 0;
    double t2_crit = 0.0;
    OvalPoint merge_point;
};

/// Solve q sinh 2q = -p sin 2p for q >= 0 on oval n. q = 0 exactly at the
/// interval endpoints. Throws OutOfOvalRange when p is outside
/// [(2n+1)pi/2, (2n+2)pi/2].
double oval_branch(int n, double p);

/// Residual of the eigenvalue matching condition at x = 0:
/// F(E) = lambda cot lambda + kappa cot kappa with principal square roots.
Complex matching_residual(Complex energy, double t2);

/// All real levels on ovals 0..n_max: intersections of each oval with the
/// hyperbola 2pq = T^2, converted to E = p^2 - q^2, sorted ascending and
/// indexed from 0 with quasi-parity (-1)^N. T^2 = 0 returns the Hermitian
/// levels (N+1)^2 pi^2 / 4 exactly. If T^2 sits on a critical coupling (to
/// within ~1e-9 relative) that oval contributes one level flagged
/// exceptional.
RealLevels real_levels(const SquareWellParams& params, int n_max);

/// Largest T^2 for which oval n still carries real levels: the maximum of
/// 2 p q_oval(p) over the oval, located by a coarse scan plus golden-section
/// refinement. The maximizer is the tangency point of the hyperbola.
CriticalCoupling critical_coupling(int n);

/// The complex-conjugate level pair that replaces oval n's two real levels
/// for T^2 above the critical coupling. Newton-seeded from the merge point;
/// the member with Im E > 0 comes first and the second root is verified to be
/// its conjugate. Throws NotBroken below the critical coupling.
std::pair<SquareWellLevel, SquareWellLevel> broken_pair(const SquareWellParams& params, int n);

/// Eigenfunction: sin lambda(x+1) for x <= 0, C sin kappa(x-1) for x >= 0.
/// C is fixed by matching at x = 0; the continuity form -sin lambda/sin kappa
/// and the derivative form lambda cos lambda/(kappa cos kappa) agree at an
/// eigenvalue, and the better-conditioned one is used (the continuity form is
/// 0/0 at the odd Hermitian levels).
Complex wavefunction(const SquareWellLevel& level, double x);

} // namespace ptnorm
