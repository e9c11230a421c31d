#include "ptnorm/pseudometric.hpp"

#include <algorithm>
#include <cmath>

namespace ptnorm {

PtContour::PtContour(double delta_, double half_length_, int panels_, int points_per_panel_)
    : delta(delta_), half_length(half_length_), panels(panels_),
      points_per_panel(points_per_panel_) {
    if (delta < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "contour shift must be >= 0");
    }
    if (half_length <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "contour half-length must be > 0");
    }
    if (panels < 1 || points_per_panel < 1) {
        throw Error(ErrorKind::InvalidArgument, "panels and points must be >= 1");
    }
    QuadratureRule rule = gauss_legendre(points_per_panel);
    ts.reserve(std::size_t(panels) * points_per_panel);
    weights.reserve(std::size_t(panels) * points_per_panel);
    const double width = 2.0 * half_length / panels;
    for (int p = 0; p < panels; ++p) {
        double a = -half_length + p * width;
        double mid = a + 0.5 * width;
        for (int j = 0; j < points_per_panel; ++j) {
            ts.push_back(mid + 0.5 * width * rule.nodes[j]);
            weights.push_back(0.5 * width * rule.weights[j]);
        }
    }
}

PtContour oscillator_contour(double delta, double half_length) {
    return PtContour(delta, half_length, 16, 50);
}

PtContour squarewell_contour() { return PtContour(0.0, 1.0, 8, 50); }

Complex pseudo_product(const WaveFn& phi, const WaveFn& psi, const PtContour& contour,
                       double boundary_tol) {
    // Truncation guard at the endpoints t = +-L themselves (not the nearest
    // quadrature nodes: square-well integrands vanish exactly at the walls
    // but not at the nodes beside them).
    for (double t_end : {-contour.half_length, contour.half_length}) {
        Complex r = contour.point(t_end);
        double b = std::abs(std::conj(phi(-std::conj(r))) * psi(r));
        if (b > boundary_tol) {
            throw Error(ErrorKind::TruncationTooTight,
                        "integrand has not decayed at the contour ends; increase half_length");
        }
    }
    Complex sum{0.0, 0.0};
    const std::size_t n = contour.size();
    for (std::size_t j = 0; j < n; ++j) {
        Complex r = contour.point(contour.ts[j]);
        // PT image of r = t - i d is -conj(r) = -t - i d: still on the contour.
        sum += contour.weights[j] * std::conj(phi(-std::conj(r))) * psi(r);
    }
    return sum;
}

double norm_product(const WaveFn& psi, const PtContour& contour) {
    double sum = 0.0;
    for (std::size_t j = 0; j < contour.size(); ++j) {
        Complex v = psi(contour.point(contour.ts[j]));
        sum += contour.weights[j] * std::norm(v);
    }
    return sum;
}

double max_abs_on_contour(const WaveFn& psi, const PtContour& contour) {
    double m = 0.0;
    for (double t : contour.ts) {
        m = std::max(m, std::abs(psi(contour.point(t))));
    }
    return m;
}

const char* to_string(GramClass c) {
    switch (c) {
    case GramClass::UnbrokenDiagonal: return "unbroken-diagonal";
    case GramClass::BrokenBlock: return "broken-block";
    case GramClass::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

namespace {

GramClass classify(const GramMatrix& g, double tol) {
    const std::size_t n = g.size;
    if (n == 0) {
        return GramClass::UnbrokenDiagonal;
    }
    // partner[i] = i for a +-1 diagonal entry, j for a zero-diagonal pair
    // bridged by nonzero cross entries, npos for unassigned.
    const std::size_t npos = std::size_t(-1);
    std::vector<std::size_t> partner(n, npos);
    std::size_t i = 0;
    bool any_pair = false;
    while (i < n) {
        Complex d = g.at(i, i);
        bool unit = std::abs(std::abs(d) - 1.0) < tol && std::abs(d.imag()) < tol;
        if (unit) {
            partner[i] = i;
            ++i;
            continue;
        }
        bool zero = std::abs(d) < tol;
        if (zero && i + 1 < n && std::abs(g.at(i + 1, i + 1)) < tol &&
            std::abs(g.at(i, i + 1)) >= tol && std::abs(g.at(i + 1, i)) >= tol) {
            partner[i] = i + 1;
            partner[i + 1] = i;
            any_pair = true;
            i += 2;
            continue;
        }
        return GramClass::Inconsistent;
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || partner[a] == b) {
                continue;
            }
            if (std::abs(g.at(a, b)) >= tol) {
                return GramClass::Inconsistent;
            }
        }
    }
    return any_pair ? GramClass::BrokenBlock : GramClass::UnbrokenDiagonal;
}

} // namespace

GramMatrix gram(const std::vector<WaveFn>& states, const std::vector<std::string>& labels,
                const PtContour& contour, double tol) {
    if (!labels.empty() && labels.size() != states.size()) {
        throw Error(ErrorKind::InvalidArgument, "label count does not match state count");
    }
    GramMatrix g;
    g.size = states.size();
    g.entries.resize(g.size * g.size);
    g.labels = labels;
    for (std::size_t i = 0; i < g.size; ++i) {
        for (std::size_t j = 0; j < g.size; ++j) {
            g.entries[i * g.size + j] = pseudo_product(states[i], states[j], contour);
        }
    }
    g.classification = classify(g, tol);
    return g;
}

BrokenPair normalize_pair(const BrokenPair& pair, const PtContour& contour, double tol) {
    Complex c = pseudo_product(pair.psi_plus, pair.psi_minus, contour);
    if (std::abs(c) < 1e-12) {
        throw Error(ErrorKind::DegeneratePair, "cross pseudo-product vanishes");
    }
    BrokenPair out;
    out.psi_plus = pair.psi_plus;
    WaveFn minus = pair.psi_minus;
    out.psi_minus = [minus, c](Complex r) { return minus(r) / c; };
    out.energy = pair.energy;
    out.cross_norm = pseudo_product(out.psi_plus, out.psi_minus, contour);
    double self_plus = std::abs(pseudo_product(out.psi_plus, out.psi_plus, contour));
    double self_minus = std::abs(pseudo_product(out.psi_minus, out.psi_minus, contour));
    if (self_plus > tol || self_minus > tol) {
        throw Error(ErrorKind::InvalidArgument,
                    "self pseudo-products do not vanish; not a broken pair");
    }
    return out;
}

double completeness_defect(const std::vector<ProjectorTerm>& basis, const PtContour& contour,
                           const WaveFn& f, const std::vector<Complex>& grid) {
    std::vector<Complex> coeff(basis.size());
    for (std::size_t n = 0; n < basis.size(); ++n) {
        coeff[n] = basis[n].weight * pseudo_product(basis[n].bra, f, contour);
    }
    double defect = 0.0;
    for (Complex r : grid) {
        Complex rec{0.0, 0.0};
        for (std::size_t n = 0; n < basis.size(); ++n) {
            rec += coeff[n] * basis[n].ket(r);
        }
        defect = std::max(defect, std::abs(rec - f(r)));
    }
    return defect;
}

} // namespace ptnorm
