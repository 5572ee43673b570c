#include "slgal/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slgal/ode.hpp"

namespace slgal {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); }

RealPoly shifted_without_constant(const RealPoly& f, double z0) {
    const auto t = f.taylor_shift(Complex(z0));
    std::vector<double> c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) c[i] = t[i].real();
    if (!c.empty()) c[0] = 0.0;
    return RealPoly(std::move(c));
}

bool is_pole(const RationalFn& r, double z) { return std::abs(r.den(z)) <= r.den.rounding_bound(z); }

}  // namespace

SLProblem::SLProblem(RealPoly f, RationalFn g, RationalFn h, double z_minus, double z_plus,
                     double gamma_init, FamilyTag tag)
    : f_(std::move(f)),
      df_(f_.derivative()),
      g_(std::move(g)),
      h_(std::move(h)),
      z_minus_(z_minus),
      z_plus_(z_plus),
      gamma_init_(gamma_init),
      family_(tag),
      f_near_minus_(shifted_without_constant(f_, z_minus)),
      f_near_plus_(shifted_without_constant(f_, z_plus)) {
    validate();
}

SLProblem SLProblem::custom(RealPoly f, RationalFn g, RationalFn h, double z_minus, double z_plus,
                            double gamma_init) {
    return SLProblem(std::move(f), std::move(g), std::move(h), z_minus, z_plus, gamma_init, CustomFamily{});
}

void SLProblem::validate() const {
    if (!std::isfinite(z_minus_) || !std::isfinite(z_plus_) || !std::isfinite(gamma_init_)) {
        fail("z_minus, z_plus and gamma_init must be finite");
    }
    if (z_minus_ == z_plus_) fail("z_minus and z_plus must differ");
    for (const auto& [name, z] : {std::pair{"z-", z_minus_}, std::pair{"z+", z_plus_}}) {
        const double scale = std::max(1e-12, 1e3 * f_.rounding_bound(z));
        if (std::abs(f_(z)) > scale) fail(std::string("f(") + name + ")=" + fmt(f_(z)) + " is not zero");
    }
    const double dm = df_(z_minus_), dp = df_(z_plus_);
    if (std::abs(dm) <= 1e-12) fail("f'(z-)=0, singularity not regular-linearizable");
    if (std::abs(dp) <= 1e-12) fail("f'(z+)=0, singularity not regular-linearizable");
    if (dm < 0) fail("f'(z-)=" + fmt(dm) + " < 0: z- must be a source");
    if (dp > 0) fail("f'(z+)=" + fmt(dp) + " > 0: z+ must be a sink");

    const double lo = std::min(z_minus_, z_plus_), hi = std::max(z_minus_, z_plus_);
    if (!(gamma_init_ > lo && gamma_init_ < hi)) fail("gamma_init must lie strictly between z- and z+");

    for (const Complex& r : roots(f_)) {
        if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r)) && r.real() > lo + 1e-9 &&
            r.real() < hi - 1e-9) {
            fail("f has a zero at z=" + fmt(r.real()) + " between z- and z+; no heteroclinic connection");
        }
    }
    for (const auto& [name, fn] : {std::pair{"g", &g_}, std::pair{"h", &h_}}) {
        if (is_pole(*fn, z_minus_)) fail(std::string(name) + " has a pole at z-, violating holomorphy at z-");
        if (is_pole(*fn, z_plus_)) fail(std::string(name) + " has a pole at z+, violating holomorphy at z+");
        for (const Complex& r : roots(fn->den)) {
            if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r)) && r.real() >= lo && r.real() <= hi) {
                fail(std::string(name) + " has a pole at z=" + fmt(r.real()) + " on the heteroclinic orbit");
            }
        }
    }
}

std::string SLProblem::family_name() const {
    if (is_hulthen()) return "hulthen";
    if (is_allen_cahn()) return "allen_cahn";
    return "custom";
}

SLProblem make_hulthen(double alpha1, double alpha2, double alpha3) {
    if (!(alpha1 > 0) || !(alpha2 > 0) || !(alpha3 > 0)) {
        throw Error(ErrorKind::InvalidParameter, "Hulthen parameters must be strictly positive");
    }
    // h(z) = a2 (z-1)/D - a3 (z-1)^2/D^2,  D = (a1-1) z - a1
    const RealPoly zm1{-1.0, 1.0};
    const RealPoly d{-alpha1, alpha1 - 1.0};
    const RealPoly num = alpha2 * (zm1 * d) - alpha3 * (zm1 * zm1);
    RationalFn h(num, d * d);
    return SLProblem(RealPoly{0.0, 1.0, -1.0}, RationalFn::constant(0.0), std::move(h), 0.0, 1.0, 0.5,
                     HulthenParams{alpha1, alpha2, alpha3});
}

SLProblem make_allen_cahn(double alpha) {
    if (!(alpha > 0 && alpha < 1)) {
        throw Error(ErrorKind::InvalidParameter, "Allen-Cahn parameter alpha must lie in (0,1)");
    }
    const double s = 1.0 / std::sqrt(2.0);
    RealPoly f{0.0, s, -s};
    const RationalFn g = RationalFn::constant(std::sqrt(2.0) * (0.5 - alpha));
    const RationalFn h = RationalFn::polynomial(RealPoly{alpha - 1.0, 2.0 * (2.0 - alpha), -3.0});
    return SLProblem(std::move(f), g, h, 0.0, 1.0, 0.5, AllenCahnParams{alpha});
}

namespace {

// Logistic orbit from 0 to 1 with rate r: z = 1/(1+e^{-r x}).
OrbitPoint logistic(double rate, double x) {
    const double t = rate * x;
    if (t >= 0) {
        const double e = std::exp(-t);
        return {1.0 / (1.0 + e), 1.0 / (1.0 + e), e / (1.0 + e)};
    }
    const double e = std::exp(t);
    return {e / (1.0 + e), e / (1.0 + e), 1.0 / (1.0 + e)};
}

// Flow the distance to the nearer equilibrium so small distances keep full relative accuracy.
OrbitPoint custom_orbit(const SLProblem& p, double x) {
    const double width = p.z_plus() - p.z_minus();
    const double d0_minus = p.gamma_init() - p.z_minus();
    const double d0_plus = p.z_plus() - p.gamma_init();
    ode::StepControl ctl;
    ctl.rtol = 1e-12;
    ctl.h_max = 0.5;
    if (x == 0.0) return {p.gamma_init(), d0_minus, d0_plus};
    if (x > 0) {
        // u = z+ - z,  du/dx = -f(z+ - u)
        const RealPoly& fp = p.f_near_plus();
        auto rhs = [&](double, double u) { return -fp(-u); };
        const double u = ode::integrate(rhs, 0.0, x, d0_plus, ctl).y;
        return {p.z_plus() - u, width - u, u};
    }
    // v = z - z-,  dv/dx = f(z- + v)
    const RealPoly& fm = p.f_near_minus();
    auto rhs = [&](double, double v) { return fm(v); };
    const double v = ode::integrate(rhs, 0.0, x, d0_minus, ctl).y;
    return {p.z_minus() + v, v, width - v};
}

}  // namespace

OrbitPoint orbit_point(const SLProblem& p, double x) {
    if (p.is_hulthen()) return logistic(1.0, x);
    if (p.is_allen_cahn()) return logistic(1.0 / std::sqrt(2.0), x);
    return custom_orbit(p, x);
}

CoefficientValues coefficient_values(const SLProblem& p, double x) {
    const double z = orbit_point(p, x).z;
    return {p.g()(z), p.h()(z)};
}

double sup_nu(const SLProblem& p) {
    if (const auto* hp = std::get_if<HulthenParams>(&p.family())) {
        // nu = a2 y - a3 y^2 over y in (0, 1/a1); interior vertex iff a1 a2 < 2 a3
        if (hp->alpha1 * hp->alpha2 < 2.0 * hp->alpha3) return hp->alpha2 * hp->alpha2 / (4.0 * hp->alpha3);
        return hp->alpha2 / hp->alpha1 - hp->alpha3 / (hp->alpha1 * hp->alpha1);
    }
    if (const auto* ac = std::get_if<AllenCahnParams>(&p.family())) {
        return (ac->alpha * ac->alpha - ac->alpha + 1.0) / 3.0;
    }
    const double lo = std::min(p.z_minus(), p.z_plus()), hi = std::max(p.z_minus(), p.z_plus());
    const int n = 4000;
    const double step = (hi - lo) / n;
    int best = 0;
    double best_val = p.h()(lo);
    for (int i = 1; i <= n; ++i) {
        const double v = p.h()(lo + i * step);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = lo + std::max(0, best - 1) * step;
    double b = lo + std::min(n, best + 1) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = p.h()(c), fd = p.h()(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = p.h()(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = p.h()(d);
        }
    }
    return std::max({best_val, fc, fd});
}

}  // namespace slgal
