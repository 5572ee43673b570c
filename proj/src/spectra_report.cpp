#include "slgal/spectra_report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "slgal/oracle.hpp"

namespace slgal {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return out;
}

std::vector<CandidateEigenvalue> verified_only(const SLProblem& p, std::vector<CandidateEigenvalue> c, bool verified) {
    if (!verified) return c;
    std::vector<CandidateEigenvalue> out;
    for (auto& e : c) {
        if (verify(p, e.lambda).eigenvalue_confirmed) out.push_back(e);
    }
    return out;
}

char tag_char(SpectrumTag t) {
    switch (t) {
    case SpectrumTag::DiscreteCandidate: return 'D';
    case SpectrumTag::ContinuousSpectrum: return 'C';
    case SpectrumTag::NotEigenvalue: return 'N';
    }
    return 'N';
}

}  // namespace

SweepTable sweep_hulthen(double alpha1, double alpha3, double nu_lo, double nu_hi, int n, bool verified) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "sweep needs at least 2 points");
    SweepTable t{"nu_minus", {}, true};
    for (double nu : linspace(nu_lo, nu_hi, n)) {
        const double alpha2 = alpha1 * nu + alpha3 / alpha1;
        if (!(alpha2 > 0.0)) {
            throw Error(ErrorKind::InvalidParameter, "alpha2 = " + format_double(alpha2) + " <= 0 at nu- = " +
                                                         format_double(nu));
        }
        const SLProblem p = make_hulthen(alpha1, alpha2, alpha3);
        auto ev = verified_only(p, candidate_eigenvalues(p), verified);
        std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) { return a.lambda.real() > b.lambda.real(); });
        t.rows.push_back({nu, std::move(ev), std::sqrt(std::max(nu, 0.0)), alpha2 / (2.0 * std::sqrt(alpha3))});
    }
    return t;
}

SweepTable sweep_allen_cahn(double a_lo, double a_hi, int n, bool verified) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "sweep needs at least 2 points");
    if (!(a_lo > 0.0 && a_hi < 1.0 && a_lo <= a_hi)) throw Error(ErrorKind::InvalidParameter, "alpha range must lie in (0,1)");
    SweepTable t{"alpha", {}, false};
    for (double a : linspace(a_lo, a_hi, n)) {
        const SLProblem p = make_allen_cahn(a);
        auto ev = verified_only(p, candidate_eigenvalues(p), verified);
        t.rows.push_back({a, std::move(ev), std::max(a - 1.0, -a), sup_nu(p)});
    }
    return t;
}

void write_sweep_csv(const SweepTable& t, std::ostream& out) {
    out << "param,branch_k,lambda,sqrt_lambda,bound_lo,bound_hi\n";
    for (const auto& row : t.rows) {
        for (const auto& e : row.eigenvalues) {
            const double lam = e.lambda.real();
            out << format_double(row.param) << ',' << e.k << ',' << format_double(lam) << ','
                << format_double(lam >= 0.0 ? std::sqrt(lam) : NAN) << ',' << format_double(row.bound_lo) << ','
                << format_double(row.bound_hi) << '\n';
        }
    }
}

double RegionGrid::re_at(int i) const {
    const double step = (re_hi - re_lo) / res;
    return 0.5 * (re_lo + re_hi) + (i + 0.5 - 0.5 * res) * step;
}

double RegionGrid::im_at(int j) const {
    const double step = (im_hi - im_lo) / res;
    return 0.5 * (im_lo + im_hi) + (j + 0.5 - 0.5 * res) * step;
}

RegionGrid region_grid(const SLProblem& p, double re_lo, double re_hi, double im_lo, double im_hi, int res) {
    if (res < 10) throw Error(ErrorKind::InvalidParameter, "region resolution must be at least 10");
    if (!(re_lo < re_hi && im_lo < im_hi)) throw Error(ErrorKind::EmptyRange, "empty region");
    RegionGrid g{re_lo, re_hi, im_lo, im_hi, res, {}};
    const AsymptoticData d = endpoint_data(p);
    const double hr = 0.5 * (re_hi - re_lo) / res, hi = 0.5 * (im_hi - im_lo) / res;
    g.cells.resize(static_cast<std::size_t>(res) * res);
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            const Complex c(g.re_at(i), g.im_at(j));
            const SpectrumClass sc = classify_lambda(d, c);
            char tag = sc.boundary ? 'B' : tag_char(sc.tag);
            if (tag != 'B') {
                for (const Complex off : {Complex(-hr, -hi), Complex(hr, -hi), Complex(-hr, hi), Complex(hr, hi)}) {
                    const SpectrumClass corner = classify_lambda(d, c + off);
                    if (corner.boundary || corner.tag != sc.tag) {
                        tag = 'B';
                        break;
                    }
                }
            }
            g.cells[static_cast<std::size_t>(j) * res + i] = tag;
        }
    }
    return g;
}

void write_region_csv(const RegionGrid& g, std::ostream& out) {
    out << "lam_re,lam_im,class\n";
    for (int j = 0; j < g.res; ++j) {
        for (int i = 0; i < g.res; ++i) {
            out << format_double(g.re_at(i)) << ',' << format_double(g.im_at(j)) << ',' << g.at(i, j) << '\n';
        }
    }
}

}  // namespace slgal
