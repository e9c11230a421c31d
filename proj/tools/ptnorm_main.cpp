// Command-line front end: spectra, Gram matrices, and pseudo-norm traces as
// CSV or JSON tables.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 regime error
// (a computation requested outside its domain of validity).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptnorm/evolution.hpp"
#include "ptnorm/oscillator.hpp"
#include "ptnorm/pseudometric.hpp"
#include "ptnorm/squarewell.hpp"

using ptnorm::Complex;
using ptnorm::Error;
using ptnorm::ErrorKind;
using ordered_json = nlohmann::ordered_json;

namespace {

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw Error(ErrorKind::InvalidArgument, "trailing characters in number: " + s);
        }
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "not a number: " + s);
    }
}

Complex parse_complex(std::string s) {
    std::string t;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            t += c;
        }
    }
    if (t.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty coefficient");
    }
    if (t.back() != 'i' && t.back() != 'I') {
        return {parse_double(t), 0.0};
    }
    t.pop_back();
    if (t.empty() || t == "+") {
        return {0.0, 1.0};
    }
    if (t == "-") {
        return {0.0, -1.0};
    }
    // Split "a+bi" at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, parse_double(t)};
    }
    std::string im = t.substr(split);
    double iv = (im == "+") ? 1.0 : (im == "-") ? -1.0 : parse_double(im);
    return {parse_double(t.substr(0, split)), iv};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

// "lo:hi:count" (count inclusive samples) or a comma-separated list.
std::vector<double> parse_times(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw Error(ErrorKind::InvalidArgument, "time grid must be lo:hi:count");
        }
        double lo = parse_double(parts[0]);
        double hi = parse_double(parts[1]);
        long count = std::lround(parse_double(parts[2]));
        if (count < 1) {
            throw Error(ErrorKind::InvalidArgument, "time grid needs at least one sample");
        }
        std::vector<double> ts(count);
        for (long i = 0; i < count; ++i) {
            ts[i] = count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
        }
        return ts;
    }
    std::vector<double> ts;
    for (const std::string& part : split(spec, ',')) {
        ts.push_back(parse_double(part));
    }
    return ts;
}

// "lo:hi:step" or a comma-separated list.
std::vector<double> parse_sweep(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw Error(ErrorKind::InvalidArgument, "sweep must be lo:hi:step");
        }
        double lo = parse_double(parts[0]);
        double hi = parse_double(parts[1]);
        double step = parse_double(parts[2]);
        if (step <= 0.0 || hi < lo) {
            throw Error(ErrorKind::InvalidArgument, "sweep needs hi >= lo and step > 0");
        }
        long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
        std::vector<double> vs(count);
        for (long i = 0; i < count; ++i) {
            vs[i] = lo + double(i) * step;
        }
        return vs;
    }
    std::vector<double> vs;
    for (const std::string& part : split(spec, ',')) {
        vs.push_back(parse_double(part));
    }
    return vs;
}

struct Output {
    std::string format = "csv";
    std::string path;
    ordered_json meta = ordered_json::object();
    std::vector<ordered_json> records;
};

std::string csv_cell(const ordered_json& v) {
    char buf[40];
    if (v.is_number_float()) {
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_number_integer()) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v.get<std::int64_t>()));
        return buf;
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "1" : "0";
    }
    return v.get<std::string>();
}

void emit(const Output& out) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.path.empty()) {
        file.open(out.path);
        if (!file) {
            throw Error(ErrorKind::InvalidArgument, "cannot open output file: " + out.path);
        }
        os = &file;
    }
    if (out.format == "json") {
        ordered_json doc = out.meta;
        doc["records"] = out.records;
        *os << doc.dump(2) << "\n";
        return;
    }
    // CSV: header from the first record; metadata goes to the error stream
    // so stdout stays a plain table.
    for (auto it = out.meta.begin(); it != out.meta.end(); ++it) {
        std::cerr << "# " << it.key() << " = " << it.value().dump() << "\n";
    }
    if (out.records.empty()) {
        return;
    }
    bool first = true;
    for (auto it = out.records.front().begin(); it != out.records.front().end(); ++it) {
        *os << (first ? "" : ",") << it.key();
        first = false;
    }
    *os << "\n";
    for (const ordered_json& rec : out.records) {
        first = true;
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            *os << (first ? "" : ",") << csv_cell(it.value());
            first = false;
        }
        *os << "\n";
    }
}

double env_tol(double fallback) {
    const char* s = std::getenv("PTNORM_TOL");
    if (s == nullptr || *s == '\0') {
        return fallback;
    }
    double v = parse_double(s);
    if (v <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "PTNORM_TOL must be positive");
    }
    return v;
}

struct CommonOpts {
    double t2 = 0.0;
    double g = 0.0;
    double delta = 1.0;
    int nmax = 3;
    int trunc = 8;
    double contour_length = 8.0;
    int points = 50;
};

ptnorm::PtContour oscillator_contour_for(const CommonOpts& o) {
    int panels = std::max(2, 2 * int(std::ceil(o.contour_length)));
    return ptnorm::PtContour(o.delta, o.contour_length, panels, o.points);
}

ptnorm::PtContour squarewell_contour_for(const CommonOpts& o) {
    return ptnorm::PtContour(0.0, 1.0, 8, o.points);
}

void run_squarewell(const CommonOpts& o, const std::string& sweep_spec, Output& out) {
    std::vector<double> t2s =
        sweep_spec.empty() ? std::vector<double>{o.t2} : parse_sweep(sweep_spec);
    out.meta["model"] = "squarewell";
    out.meta["nmax"] = o.nmax;
    for (double t2 : t2s) {
        ptnorm::SquareWellParams params{t2};
        ptnorm::RealLevels rl = ptnorm::real_levels(params, o.nmax);
        std::vector<ptnorm::SquareWellLevel> rows = rl.levels;
        for (int oval : rl.exhausted_ovals) {
            auto pair = ptnorm::broken_pair(params, oval);
            rows.push_back(pair.first);
            rows.push_back(pair.second);
        }
        std::stable_sort(rows.begin(), rows.end(),
                         [](const ptnorm::SquareWellLevel& a, const ptnorm::SquareWellLevel& b) {
                             if (a.energy.real() != b.energy.real()) {
                                 return a.energy.real() < b.energy.real();
                             }
                             return a.energy.imag() > b.energy.imag();
                         });
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& lvl = rows[i];
            ordered_json rec;
            rec["t2"] = t2;
            rec["N"] = int(i);
            rec["re_E"] = lvl.energy.real();
            rec["im_E"] = lvl.energy.imag();
            rec["p"] = lvl.lambda.real();
            rec["q"] = -lvl.lambda.imag();
            rec["broken"] = lvl.broken;
            out.records.push_back(std::move(rec));
        }
    }
}

void run_critical(int n, Output& out) {
    ptnorm::CriticalCoupling cc = ptnorm::critical_coupling(n);
    out.meta["model"] = "squarewell";
    ordered_json rec;
    rec["oval"] = cc.oval_index;
    rec["t2_crit"] = cc.t2_crit;
    rec["p"] = cc.merge_point.p;
    rec["q"] = cc.merge_point.q;
    out.records.push_back(std::move(rec));
}

void run_oscillator(const CommonOpts& o, Output& out) {
    ptnorm::OscillatorParams params{o.g, o.delta};
    out.meta["model"] = "oscillator";
    out.meta["g"] = o.g;
    for (const auto& st : ptnorm::spectrum(params, o.nmax)) {
        ordered_json rec;
        rec["N"] = st.label.level_index;
        rec["Q"] = st.label.quasi_parity;
        rec["n"] = st.label.radial_index;
        rec["re_E"] = st.energy.real();
        rec["im_E"] = st.energy.imag();
        rec["re_exponent"] = st.exponent.real();
        rec["im_exponent"] = st.exponent.imag();
        out.records.push_back(std::move(rec));
    }
}

void run_gram(const CommonOpts& o, const std::string& model, Output& out) {
    double tol = env_tol(1e-6);
    ptnorm::GramMatrix g;
    if (model == "oscillator") {
        g = ptnorm::oscillator_gram(ptnorm::OscillatorParams{o.g, o.delta}, o.trunc,
                                    oscillator_contour_for(o), tol);
    } else if (model == "squarewell") {
        g = ptnorm::squarewell_gram(ptnorm::SquareWellParams{o.t2}, o.trunc,
                                    squarewell_contour_for(o), tol);
    } else {
        throw Error(ErrorKind::InvalidArgument, "model must be oscillator or squarewell");
    }
    out.meta["model"] = model;
    out.meta["classification"] = ptnorm::to_string(g.classification);
    out.meta["labels"] = g.labels;
    for (std::size_t i = 0; i < g.size; ++i) {
        for (std::size_t j = 0; j < g.size; ++j) {
            ordered_json rec;
            rec["i"] = int(i);
            rec["j"] = int(j);
            rec["label_i"] = g.labels[i];
            rec["label_j"] = g.labels[j];
            rec["re"] = g.at(i, j).real();
            rec["im"] = g.at(i, j).imag();
            out.records.push_back(std::move(rec));
        }
    }
}

ptnorm::WaveFn make_psi0(const std::string& spec, const ptnorm::SpectralDecomposition& basis,
                         bool squarewell) {
    if (spec == "gaussian") {
        if (squarewell) {
            // Vanishes at the walls like every basis member; the width is the
            // measured optimum for reconstruction by the first few levels.
            return [](Complex r) { return std::exp(-5.0 * r * r) - std::exp(-5.0); };
        }
        return [](Complex r) { return std::exp(-0.45 * r * r); };
    }
    if (spec.rfind("basis:", 0) == 0) {
        long k = std::lround(parse_double(spec.substr(6)));
        if (k < 0 || std::size_t(k) >= basis.modes.size()) {
            throw Error(ErrorKind::InvalidArgument, "basis index out of range");
        }
        return basis.modes[std::size_t(k)].proj.ket;
    }
    if (spec == "pair:+" || spec == "pair:-" || spec == "pair-mixture") {
        const ptnorm::Mode* plus = nullptr;
        const ptnorm::Mode* minus = nullptr;
        for (const auto& m : basis.modes) {
            if (plus == nullptr && m.name.size() >= 5 &&
                m.name.compare(m.name.size() - 5, 5, "pair+") == 0) {
                plus = &m;
            }
            if (minus == nullptr && m.name.size() >= 5 &&
                m.name.compare(m.name.size() - 5, 5, "pair-") == 0) {
                minus = &m;
            }
        }
        if (plus == nullptr || minus == nullptr) {
            throw Error(ErrorKind::NotBroken,
                        "no conjugate pair in the basis at these parameters");
        }
        if (spec == "pair:+") {
            return plus->proj.ket;
        }
        if (spec == "pair:-") {
            return minus->proj.ket;
        }
        ptnorm::WaveFn kp = plus->proj.ket;
        ptnorm::WaveFn km = minus->proj.ket;
        return [kp, km](Complex r) { return 0.1 * kp(r) + 0.15 * km(r); };
    }
    // Otherwise a comma-separated coefficient list over the basis modes.
    std::vector<Complex> a;
    for (const std::string& part : split(spec, ',')) {
        a.push_back(parse_complex(part));
    }
    if (a.size() != basis.modes.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "coefficient list has " + std::to_string(a.size()) + " entries but the basis has " +
                        std::to_string(basis.modes.size()) + " modes");
    }
    std::vector<ptnorm::WaveFn> kets;
    for (const auto& m : basis.modes) {
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

void run_evolve(const CommonOpts& o, const std::string& model, const std::string& psi0_spec,
                const std::string& times_spec, Output& out) {
    double recon_tol = env_tol(5e-3);
    ptnorm::PtContour contour =
        model == "squarewell" ? squarewell_contour_for(o) : oscillator_contour_for(o);
    ptnorm::SpectralDecomposition basis;
    if (model == "oscillator") {
        basis = ptnorm::oscillator_basis(ptnorm::OscillatorParams{o.g, o.delta}, o.trunc, contour);
    } else if (model == "squarewell") {
        basis = ptnorm::squarewell_basis(ptnorm::SquareWellParams{o.t2}, o.nmax, contour);
    } else {
        throw Error(ErrorKind::InvalidArgument, "model must be oscillator or squarewell");
    }
    ptnorm::WaveFn psi0 = make_psi0(psi0_spec, basis, model == "squarewell");
    std::vector<double> times = parse_times(times_spec);
    auto rows = ptnorm::pseudo_norm_trace(psi0, basis, times, contour, recon_tol);
    out.meta["model"] = model;
    out.meta["psi0"] = psi0_spec;
    out.meta["modes"] = int(basis.modes.size());
    for (const auto& row : rows) {
        ordered_json rec;
        rec["t"] = row.t;
        rec["re_pseudo_norm"] = row.pseudo_norm.real();
        rec["im_pseudo_norm"] = row.pseudo_norm.imag();
        rec["ordinary_norm"] = row.ordinary_norm;
        out.records.push_back(std::move(rec));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PT-symmetric spectra, pseudo-metric tables, and pseudo-unitary evolution"};
    app.require_subcommand(1);

    CommonOpts o;
    Output out;
    std::string sweep_spec, model = "oscillator", psi0_spec = "gaussian", times_spec = "0:10:50";
    int critical_n = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out.path, "Write the table to PATH instead of stdout");
    };

    CLI::App* sw = app.add_subcommand("squarewell", "Square-well spectrum (real and broken levels)");
    sw->add_option("--t2", o.t2, "Imaginary step strength T^2");
    sw->add_option("--nmax", o.nmax, "Highest oval index");
    sw->add_option("--sweep", sweep_spec, "T^2 sweep lo:hi:step or comma list");
    add_format(sw);

    CLI::App* crit = app.add_subcommand("critical", "Critical coupling of one oval");
    crit->add_option("--n", critical_n, "Oval index");
    add_format(crit);

    CLI::App* osc = app.add_subcommand("oscillator", "Oscillator spectrum");
    osc->add_option("--g", o.g, "Centrifugal coupling G");
    osc->add_option("--delta", o.delta, "Contour shift");
    osc->add_option("--nmax", o.nmax, "Highest radial index");
    add_format(osc);

    CLI::App* gr = app.add_subcommand("gram", "Pseudo-product Gram matrix of a normalized basis");
    gr->add_option("--model", model, "oscillator or squarewell");
    gr->add_option("--t2", o.t2, "Imaginary step strength T^2");
    gr->add_option("--g", o.g, "Centrifugal coupling G");
    gr->add_option("--delta", o.delta, "Contour shift");
    gr->add_option("--trunc", o.trunc, "Number of basis modes");
    gr->add_option("--contour-L", o.contour_length, "Contour half-length");
    gr->add_option("--points", o.points, "Quadrature points per panel");
    add_format(gr);

    CLI::App* ev = app.add_subcommand("evolve", "Pseudo-norm trace under spectral evolution");
    ev->add_option("--model", model, "oscillator or squarewell");
    ev->add_option("--t2", o.t2, "Imaginary step strength T^2");
    ev->add_option("--g", o.g, "Centrifugal coupling G");
    ev->add_option("--delta", o.delta, "Contour shift");
    ev->add_option("--trunc", o.trunc, "Oscillator basis size");
    ev->add_option("--nmax", o.nmax, "Square-well oval count - 1");
    ev->add_option("--contour-L", o.contour_length, "Contour half-length");
    ev->add_option("--points", o.points, "Quadrature points per panel");
    ev->add_option("--psi0", psi0_spec,
                   "Initial state: gaussian, basis:k, pair:+, pair:-, pair-mixture, or "
                   "comma-separated complex coefficients");
    ev->add_option("--times", times_spec, "Time grid lo:hi:count or comma list");
    add_format(ev);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sw->parsed()) {
            run_squarewell(o, sweep_spec, out);
        } else if (crit->parsed()) {
            if (critical_n < 0) {
                throw Error(ErrorKind::InvalidArgument, "oval index must be >= 0");
            }
            run_critical(critical_n, out);
        } else if (osc->parsed()) {
            run_oscillator(o, out);
        } else if (gr->parsed()) {
            run_gram(o, model, out);
        } else if (ev->parsed()) {
            run_evolve(o, model, psi0_spec, times_spec, out);
        }
        emit(out);
        return 0;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        switch (err.kind()) {
        case ErrorKind::InvalidArgument:
            return 2;
        case ErrorKind::OutOfOvalRange:
        case ErrorKind::NotBroken:
        case ErrorKind::ExceptionalCoupling:
        case ErrorKind::ZeroPseudoNorm:
        case ErrorKind::BranchCut:
            return 4;
        default:
            return 3;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
}
