#include "slgal/eigenfunction.hpp"

#include <algorithm>
#include <cmath>

namespace slgal {

namespace {

bool nonpositive_integer(Complex v, double tol) {
    return v.imag() == 0.0 ? (v.real() <= tol && std::abs(v.real() - std::round(v.real())) <= tol)
                           : (std::abs(v.imag()) <= tol && v.real() <= tol &&
                              std::abs(v.real() - std::round(v.real())) <= tol);
}

Complex power(Complex base, Complex e) {
    if (base == Complex(0.0)) return e.real() > 0 ? Complex(0.0) : Complex(NAN, NAN);
    return std::exp(e * std::log(base));
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * c[j];
    return acc;
}

}  // namespace

HGParams hypergeometric_reduction(const PSymbol& ps) {
    const auto& e = ps.exponents;
    return {e[0][0] + e[1][0] + e[2][0], e[0][0] + e[1][0] + e[2][1], 1.0 + e[0][0] - e[0][1]};
}

Complex gauss_series(const HGParams& h, Complex zeta, int n_max) {
    if (n_max < 1) throw Error(ErrorKind::InvalidParameter, "n_max must be at least 1");
    const bool terminates = nonpositive_integer(h.a, 0.0) || nonpositive_integer(h.b, 0.0);
    if (!terminates && std::abs(zeta) >= 1.0) {
        throw Error(ErrorKind::Divergence, "non-terminating Gauss series evaluated at |zeta| >= 1");
    }
    Complex term = 1.0, sum = 1.0;
    for (int j = 0; j < n_max; ++j) {
        const double jd = j;
        if (h.a + jd == Complex(0.0) || h.b + jd == Complex(0.0)) break;
        if (h.c + jd == Complex(0.0)) throw Error(ErrorKind::PoleInSeries, "c + j = 0 before the series terminated");
        term *= (h.a + jd) * (h.b + jd) * zeta / ((1.0 + jd) * (h.c + jd));
        sum += term;
        if (!terminates && std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

std::optional<EigenFunction> build_eigenfunction(const SLProblem& p, Complex lambda, double tol) {
    const PSymbol ps = p_symbol(p, lambda);
    const auto [mobius, nps] = normalize_to_01inf(ps);
    HGParams hg = hypergeometric_reduction(nps);
    if (nonpositive_integer(hg.c, 1e-12)) {
        throw Error(ErrorKind::PoleInSeries, "c is a non-positive integer; second-kind solution not supported");
    }
    EigenFunction ef;
    ef.mobius = mobius;
    ef.exp0 = nps.exponents[0][0];
    ef.exp1 = nps.exponents[1][0];
    ef.lambda = lambda;
    if (!(ef.exp0.real() > 0.0 && ef.exp1.real() > 0.0)) return std::nullopt;

    const bool a_ok = nonpositive_integer(hg.a, tol), b_ok = nonpositive_integer(hg.b, tol);
    if (!a_ok && !b_ok) return std::nullopt;
    const bool use_a = a_ok && (!b_ok || std::round(hg.a.real()) > std::round(hg.b.real()));
    Complex& term_param = use_a ? hg.a : hg.b;
    term_param = std::round(term_param.real());
    const int n = static_cast<int>(-term_param.real());

    ef.params = hg;
    ef.coeffs.assign(1, 1.0);
    for (int j = 0; j < n; ++j) {
        const double jd = j;
        ef.coeffs.push_back(ef.coeffs.back() * (hg.a + jd) * (hg.b + jd) / ((1.0 + jd) * (hg.c + jd)));
    }
    return ef;
}

Complex eval_eigenfunction(const EigenFunction& ef, const SLProblem& p, double x) {
    const auto [zeta, one_minus] = mobius_on_orbit(ef.mobius, p, orbit_point(p, x));
    return power(zeta, ef.exp0) * power(one_minus, ef.exp1) * horner(ef.coeffs, zeta);
}

std::pair<Complex, Complex> eval_in_z(const EigenFunction& ef, Complex z) {
    const MobiusMap& m = ef.mobius;
    const Complex den = m.c * z + m.d;
    const Complex zeta = (m.a * z + m.b) / den;
    const Complex one_minus = ((m.c - m.a) * z + (m.d - m.b)) / den;
    const Complex pre = power(zeta, ef.exp0) * power(one_minus, ef.exp1);
    const Complex f = horner(ef.coeffs, zeta);
    const Complex psi = pre * f;
    const Complex dpsi_dzeta = psi * (ef.exp0 / zeta - ef.exp1 / one_minus) + pre * horner_derivative(ef.coeffs, zeta);
    return {psi, dpsi_dzeta * m.determinant() / (den * den)};
}

double residual(const SLProblem& p, Complex lambda, const EigenFunction& ef, const std::vector<double>& xs,
                double h) {
    double worst = 0.0, scale = 0.0;
    for (double x : xs) {
        const Complex m2 = eval_eigenfunction(ef, p, x - 2 * h), m1 = eval_eigenfunction(ef, p, x - h);
        const Complex c0 = eval_eigenfunction(ef, p, x);
        const Complex p1 = eval_eigenfunction(ef, p, x + h), p2 = eval_eigenfunction(ef, p, x + 2 * h);
        const Complex d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
        const Complex d2 = (-p2 + 16.0 * p1 - 30.0 * c0 + 16.0 * m1 - m2) / (12.0 * h * h);
        const CoefficientValues cv = coefficient_values(p, x);
        worst = std::max(worst, std::abs(d2 + cv.mu * d1 + cv.nu * c0 - lambda * c0));
        scale = std::max(scale, std::abs(c0));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace slgal
