#include "slgal/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slgal {

namespace {

constexpr int kInfiniteMultiplicity = 1000;

ComplexPoly to_complex(const RealPoly& p) { return p.cast<Complex>(); }

bool vanishes(const ComplexPoly& den, Complex z) { return std::abs(den(z)) <= den.rounding_bound(z); }

/// Order of vanishing of P at z0, read off its Taylor coefficients.
int multiplicity(const ComplexPoly& poly, Complex z0) {
    if (poly.is_zero()) return kInfiniteMultiplicity;
    const auto t = poly.taylor_shift(z0);
    double scale = 0.0;
    for (const auto& c : t) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (std::abs(t[j]) > 1e-9 * scale) return static_cast<int>(j);
    }
    return static_cast<int>(t.size()) - 1;
}

Complex taylor_coeff(const ComplexPoly& poly, Complex z0, int j) {
    if (j < 0) return 0.0;
    const auto t = poly.taylor_shift(z0);
    return static_cast<std::size_t>(j) < t.size() ? t[static_cast<std::size_t>(j)] : Complex(0.0);
}

/// p and q as rational functions of a local coordinate.
struct LocalForm {
    ComplexPoly pn, pd, qn0, qn1, qd;
};

LocalForm z_form(const ComplexODE& e) { return {e.p_num, e.p_den, e.q_num0, e.q_num1, e.q_den}; }

/// Pullback to w = 1/z: P(w) = 2/w - p(1/w)/w^2, Q(w) = q(1/w)/w^4.
LocalForm w_form(const ComplexODE& e) {
    LocalForm out;
    const int dn = std::max(0, e.p_num.degree()), dd = e.p_den.degree();
    const ComplexPoly rn = e.p_num.reversed(dn), rd = e.p_den.reversed(dd);
    const int ex = dd - dn - 2;  // p(1/w)/w^2 = w^ex rn/rd
    if (ex >= -1) {
        out.pn = Complex(2.0) * rd - rn.shifted(ex + 1);
        out.pd = rd.shifted(1);
    } else {
        out.pn = Complex(2.0) * rd.shifted(-ex - 1) - rn;
        out.pd = rd.shifted(-ex);
    }
    const int n = std::max({0, e.q_num0.degree(), e.q_num1.degree()}), dq = e.q_den.degree();
    ComplexPoly r0 = e.q_num0.reversed(n), r1 = e.q_num1.reversed(n), rq = e.q_den.reversed(dq);
    const int e2 = dq - n - 4;  // Q = w^e2 (r0 - lambda r1)/rq
    if (e2 >= 0) {
        out.qn0 = r0.shifted(e2);
        out.qn1 = r1.shifted(e2);
        out.qd = rq;
    } else {
        out.qn0 = r0;
        out.qn1 = r1;
        out.qd = rq.shifted(-e2);
    }
    return out;
}

void set_orders(SingularPoint& s, const LocalForm& lf, Complex z0) {
    s.order_p = multiplicity(lf.pd, z0) - std::min(multiplicity(lf.pn, z0), kInfiniteMultiplicity - 1);
    const int mn = std::min(multiplicity(lf.qn0, z0), multiplicity(lf.qn1, z0));
    s.order_q = multiplicity(lf.qd, z0) - std::min(mn, kInfiniteMultiplicity - 1);
    s.kind = (s.order_p <= 1 && s.order_q <= 2) ? SingularKind::Regular : SingularKind::Irregular;
}

bool is_singular(const SingularPoint& s) { return s.order_p > 0 || s.order_q > 0; }

std::array<Complex, 2> general_indicial(const LocalForm& lf, Complex z0, Complex lambda) {
    const int m = multiplicity(lf.pd, z0);
    const Complex p0 = m >= 1 ? taylor_coeff(lf.pn, z0, m - 1) / taylor_coeff(lf.pd, z0, m) : Complex(0.0);
    const int mq = multiplicity(lf.qd, z0);
    Complex q0 = 0.0;
    if (mq >= 2) {
        q0 = (taylor_coeff(lf.qn0, z0, mq - 2) - lambda * taylor_coeff(lf.qn1, z0, mq - 2)) /
             taylor_coeff(lf.qd, z0, mq);
    }
    return {p0 - 1.0, q0};
}

Complex newton_polish(const ComplexPoly& poly, Complex z) {
    const ComplexPoly dp = poly.derivative();
    for (int it = 0; it < 8; ++it) {
        const Complex d = dp(z);
        if (std::abs(d) == 0.0) break;
        const Complex step = poly(z) / d;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

bool same_point(Complex a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)); }

}  // namespace

std::string to_string(SingularKind k) { return k == SingularKind::Regular ? "Regular" : "Irregular"; }

std::string to_string(SingularSource s) {
    switch (s) {
    case SingularSource::ZeroOfF: return "ZeroOfF";
    case SingularSource::PoleOfG: return "PoleOfG";
    case SingularSource::PoleOfH: return "PoleOfH";
    case SingularSource::Infinity: return "Infinity";
    }
    return "Infinity";
}

std::string SingularPoint::label() const { return at_infinity ? "inf" : fmt_complex(location); }

Complex ComplexODE::p(Complex z) const {
    if (vanishes(p_den, z)) throw Error(ErrorKind::SingularPoint, "p evaluated at a singular point z=" + fmt_complex(z));
    return p_num(z) / p_den(z);
}

Complex ComplexODE::q(Complex z, Complex lambda) const {
    if (vanishes(q_den, z)) throw Error(ErrorKind::SingularPoint, "q evaluated at a singular point z=" + fmt_complex(z));
    return (q_num0(z) - lambda * q_num1(z)) / q_den(z);
}

ComplexODE transformed_equation(const SLProblem& p) {
    const ComplexPoly f = to_complex(p.f()), df = to_complex(p.df());
    const ComplexPoly gn = to_complex(p.g().num), gd = to_complex(p.g().den);
    const ComplexPoly hn = to_complex(p.h().num), hd = to_complex(p.h().den);
    ComplexODE e;
    e.p_num = gn + df * gd;
    e.p_den = f * gd;
    e.q_num0 = hn;
    e.q_num1 = hd;
    e.q_den = f * f * hd;
    return e;
}

std::vector<SingularPoint> singularities(const SLProblem& p) {
    const ComplexODE e = transformed_equation(p);
    const std::array<ComplexPoly, 3> sources{to_complex(p.f()), to_complex(p.g().den), to_complex(p.h().den)};

    struct Cluster {
        std::vector<Complex> members;
        Complex centre() const {
            Complex s = 0.0;
            for (const auto& m : members) s += m;
            return s / static_cast<double>(members.size());
        }
    };
    std::vector<Cluster> clusters;
    for (const auto& poly : sources) {
        for (const Complex& r : roots(poly)) {
            bool placed = false;
            for (auto& c : clusters) {
                const Complex ctr = c.centre();
                if (std::abs(r - ctr) <= 1e-4 * (1.0 + std::abs(ctr))) {
                    c.members.push_back(r);
                    placed = true;
                    break;
                }
            }
            if (!placed) clusters.push_back({{r}});
        }
    }

    const LocalForm zf = z_form(e);
    std::vector<SingularPoint> out;
    for (const auto& c : clusters) {
        Complex z0 = c.centre();
        const double radius = 1e-4 * (1.0 + std::abs(z0));
        // Newton on the (m-1)-th derivative of the source with the most roots in the cluster
        int best_m = 0;
        const ComplexPoly* best = nullptr;
        for (const auto& poly : sources) {
            int m = 0;
            for (const Complex& r : roots(poly)) m += std::abs(r - z0) <= radius ? 1 : 0;
            if (m > best_m) {
                best_m = m;
                best = &poly;
            }
        }
        if (best != nullptr) {
            ComplexPoly d = *best;
            for (int k = 1; k < best_m; ++k) d = d.derivative();
            const Complex polished = newton_polish(d, z0);
            if (std::abs(polished - z0) <= radius) z0 = polished;
        }
        if (std::abs(z0.imag()) <= 1e-12 * (1.0 + std::abs(z0))) z0 = z0.real();
        for (const double e : {p.z_minus(), p.z_plus()}) {
            if (std::abs(z0 - e) <= radius) z0 = e;
        }

        SingularPoint s;
        s.location = z0;
        if (multiplicity(sources[0], z0) > 0) s.source = SingularSource::ZeroOfF;
        else if (multiplicity(sources[1], z0) > 0) s.source = SingularSource::PoleOfG;
        else s.source = SingularSource::PoleOfH;
        set_orders(s, zf, z0);
        if (is_singular(s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    const SingularPoint inf = classify_infinity(p);
    if (is_singular(inf)) out.push_back(inf);
    return out;
}

SingularPoint classify_infinity(const SLProblem& p) {
    SingularPoint s = SingularPoint::infinity();
    set_orders(s, w_form(transformed_equation(p)), 0.0);
    return s;
}

SingularPoint endpoint_point(const SLProblem& p, bool plus) {
    SingularPoint s;
    s.location = plus ? p.z_plus() : p.z_minus();
    s.source = SingularSource::ZeroOfF;
    set_orders(s, z_form(transformed_equation(p)), s.location);
    return s;
}

std::array<Complex, 2> indicial_coefficients(const SLProblem& p, const SingularPoint& point, Complex lambda) {
    if (point.kind == SingularKind::Irregular) {
        throw Error(ErrorKind::UnsupportedEquation, "irregular singular point at " + point.label());
    }
    if (!point.at_infinity) {
        for (const bool plus : {false, true}) {
            const double z = plus ? p.z_plus() : p.z_minus();
            if (same_point(point.location, z)) {
                const double a = 1.0 / p.df()(z), mu = p.g()(z), nu = p.h()(z);
                return {Complex(a * mu), a * a * (nu - lambda)};
            }
        }
        return general_indicial(z_form(transformed_equation(p)), point.location, lambda);
    }
    return general_indicial(w_form(transformed_equation(p)), 0.0, lambda);
}

std::array<Complex, 2> indicial_roots(const SLProblem& p, const SingularPoint& point, Complex lambda) {
    const auto bc = indicial_coefficients(p, point, lambda);
    return order_descending(quadratic_roots(bc[0], bc[1]));
}

Complex PSymbol::fuchs_sum() const {
    Complex s = 0.0;
    for (const auto& e : exponents) s += e[0] + e[1];
    return s;
}

PSymbol p_symbol(const SLProblem& p, Complex lambda) {
    const auto sings = singularities(p);
    std::vector<SingularPoint> others;
    std::optional<SingularPoint> zm, zp;
    for (const auto& s : sings) {
        if (!s.at_infinity && same_point(s.location, p.z_minus())) zm = s;
        else if (!s.at_infinity && same_point(s.location, p.z_plus())) zp = s;
        else others.push_back(s);
    }
    if (!zm || !zp || others.size() != 1) {
        std::string names;
        for (const auto& s : sings) names += (names.empty() ? "" : ", ") + s.label();
        throw Error(ErrorKind::OutOfScope, "expected exactly three singular points on the Riemann sphere, found " +
                                               std::to_string(sings.size()) + ": {" + names + "}");
    }
    for (const auto& s : sings) {
        if (s.kind == SingularKind::Irregular) {
            throw Error(ErrorKind::UnsupportedEquation, "irregular singular point at " + s.label());
        }
    }
    PSymbol ps;
    ps.points = {*zm, *zp, others.front()};
    for (int j = 0; j < 3; ++j) {
        ps.exponents[j] = indicial_roots(p, ps.points[j], lambda);
        const Complex d = ps.difference(j);
        ps.equal_exponents[j] = std::abs(d) <= 1e-9;
        ps.integer_difference[j] = std::abs(d.imag()) <= 1e-9 && std::abs(d.real() - std::round(d.real())) <= 1e-9;
    }
    return ps;
}

std::pair<MobiusMap, PSymbol> normalize_to_01inf(const PSymbol& ps) {
    const double zm = ps.points[0].location.real(), zp = ps.points[1].location.real();
    const SingularPoint& third = ps.points[2];
    if (ps.points[0].at_infinity || ps.points[1].at_infinity || std::abs(ps.points[0].location.imag()) > 0 ||
        std::abs(ps.points[1].location.imag()) > 0) {
        throw Error(ErrorKind::OutOfScope, "z- and z+ must be finite real points");
    }
    if (!third.at_infinity && std::abs(third.location.imag()) > 1e-12) {
        throw Error(ErrorKind::OutOfScope, "third singular point is not real: " + third.label());
    }
    MobiusMap m;
    if (third.at_infinity) {
        m = {1.0, -zm, 0.0, zp - zm};
    } else {
        const double t = third.location.real();
        m = {zp - t, -zm * (zp - t), zp - zm, -t * (zp - zm)};
    }
    if (m.determinant() == 0.0) throw Error(ErrorKind::Geometry, "degenerate Mobius map");
    // a unit denominator at infinity makes the identity exact
    if (third.at_infinity && m.d != 1.0) {
        m = {m.a / m.d, m.b / m.d, 0.0, 1.0};
    }
    PSymbol out = ps;
    out.points[0].location = 0.0;
    out.points[1].location = 1.0;
    out.points[2] = SingularPoint::infinity();
    out.points[2].kind = third.kind;
    out.points[2].order_p = third.order_p;
    out.points[2].order_q = third.order_q;
    return {m, out};
}

std::pair<double, double> mobius_on_orbit(const MobiusMap& m, const SLProblem& p, const OrbitPoint& pt) {
    const double den = m.c * pt.z + m.d;
    const double den_plus = m.c * p.z_plus() + m.d;
    const double zeta = m.a * pt.from_minus / den;
    const double one_minus = m.determinant() * pt.to_plus / (den * den_plus);
    return {zeta, one_minus};
}

}  // namespace slgal
