#include "slgal/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slgal/ode.hpp"

namespace slgal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double segment_distance(Complex a, Complex b, Complex p) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

void push_distinct(std::vector<Complex>& pts, Complex z) {
    if (pts.empty() || std::abs(pts.back() - z) > 0.0) pts.push_back(z);
}

std::vector<Complex> others_than(const std::vector<Complex>& all, Complex centre) {
    std::vector<Complex> out;
    for (const Complex& s : all) {
        if (std::abs(s - centre) > 1e-9 * (1.0 + std::abs(centre))) out.push_back(s);
    }
    return out;
}

Vector2C unit(Vector2C v) { return (1.0 / norm_of(v)) * v; }

}  // namespace

ComplexPath ComplexPath::reversed() const {
    ComplexPath r = *this;
    std::reverse(r.waypoints.begin(), r.waypoints.end());
    return r;
}

double path_clearance(const ComplexPath& path, const std::vector<Complex>& avoid) {
    double best = INFINITY;
    for (const Complex& s : avoid) {
        for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
            best = std::min(best, segment_distance(path.waypoints[i], path.waypoints[i + 1], s));
        }
        if (path.waypoints.size() == 1) best = std::min(best, std::abs(path.waypoints[0] - s));
    }
    return best;
}

Matrix2C fundamental_along_path(const ComplexODE& ode, Complex lambda, const ComplexPath& path, double rtol) {
    Matrix2C y = Matrix2C::identity();
    ode::StepControl ctl;
    ctl.rtol = rtol;
    ctl.h_max = 0.125;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        const Complex z0 = path.waypoints[i], dz = path.waypoints[i + 1] - z0;
        if (dz == Complex(0.0)) continue;
        auto rhs = [&](double t, const Matrix2C& m) {
            const Complex z = z0 + t * dz;
            const Matrix2C a{0.0, 1.0, -ode.q(z, lambda), -ode.p(z)};
            return dz * (a * m);
        };
        y = ode::integrate(rhs, 0.0, 1.0, y, ctl).y;
    }
    return y;
}

ComplexPath circle_loop(Complex base, Complex centre, double radius, bool ccw, int n) {
    const Complex off = base - centre;
    const double theta0 = std::abs(off) > 0.0 ? std::arg(off) : 0.0;
    const Complex attach = centre + std::polar(radius, theta0);
    ComplexPath path;
    path.closed = true;
    push_distinct(path.waypoints, base);
    push_distinct(path.waypoints, attach);
    const double sgn = ccw ? 1.0 : -1.0;
    for (int k = 1; k < n; ++k) path.waypoints.push_back(centre + std::polar(radius, theta0 + sgn * kTwoPi * k / n));
    path.waypoints.push_back(attach);
    push_distinct(path.waypoints, base);
    return path;
}

ComplexPath lifted_loop(Complex base, Complex centre, double radius, double height, int n) {
    const double top = std::max(base.imag(), centre.imag()) + height;
    ComplexPath tail;
    push_distinct(tail.waypoints, base);
    push_distinct(tail.waypoints, Complex(base.real(), top));
    push_distinct(tail.waypoints, Complex(centre.real(), top));
    const Complex attach = centre + Complex(0.0, radius);
    push_distinct(tail.waypoints, attach);

    ComplexPath path = tail;
    path.closed = true;
    for (int k = 1; k < n; ++k) {
        path.waypoints.push_back(centre + std::polar(radius, std::numbers::pi / 2 + kTwoPi * k / n));
    }
    path.waypoints.push_back(attach);
    for (std::size_t i = tail.waypoints.size() - 1; i-- > 0;) path.waypoints.push_back(tail.waypoints[i]);
    return path;
}

std::vector<Complex> finite_singular_locations(const SLProblem& p) {
    std::vector<Complex> out;
    for (const auto& s : singularities(p)) {
        if (!s.at_infinity) out.push_back(s.location);
    }
    return out;
}

Complex default_base(const SLProblem& p) {
    const Complex mid = 0.5 * (p.z_minus() + p.z_plus());
    const auto sings = finite_singular_locations(p);
    for (const Complex& s : sings) {
        if (std::abs(s - mid) < defaults::path_clearance) return mid + Complex(0.0, 0.1);
    }
    return mid;
}

Matrix2C monodromy_matrix(const SLProblem& p, Complex lambda, const SingularPoint& around, Complex base,
                          double radius, double clearance) {
    const ComplexODE ode = transformed_equation(p);
    const auto sings = finite_singular_locations(p);
    ComplexPath path;
    if (around.at_infinity) {
        const Complex centre = 0.5 * (p.z_minus() + p.z_plus());
        double reach = std::abs(base - centre);
        for (const Complex& s : sings) reach = std::max(reach, std::abs(s - centre));
        // solutions grow like |z|^(rho+ - rho-) out there, so the circle is kept as tight as clearance allows
        const double r = radius > reach + defaults::path_clearance ? radius : 1.5 * reach + 0.5;
        const double dx = base.real() - centre.real();
        const Complex attach = centre + Complex(dx, std::sqrt(r * r - dx * dx));
        const double theta0 = std::arg(attach - centre);
        path.closed = true;
        push_distinct(path.waypoints, base);
        push_distinct(path.waypoints, attach);
        const int n = 4 * defaults::loop_waypoints;
        for (int k = 1; k < n; ++k) path.waypoints.push_back(centre + std::polar(r, theta0 - kTwoPi * k / n));
        path.waypoints.push_back(attach);
        push_distinct(path.waypoints, base);
    } else {
        const Complex centre = around.location;
        const auto others = others_than(sings, centre);
        double nearest = INFINITY;
        for (const Complex& s : others) nearest = std::min(nearest, std::abs(s - centre));
        double r = radius;
        if (r <= 0.0) {
            r = std::isfinite(nearest) ? 0.7 * nearest : 0.4;
            r = std::min(r, 0.8 * std::abs(base - centre));
        }
        if (!(r > 0.0) || r >= std::abs(base - centre)) {
            throw Error(ErrorKind::Geometry, "loop radius must be positive and smaller than the base distance");
        }
        path = circle_loop(base, centre, r);
        if (path_clearance(path, others) < clearance) {
            path = lifted_loop(base, centre, r, std::max(1.0, 2.0 * r));
        }
    }
    std::vector<Complex> avoid = sings;
    if (!around.at_infinity) avoid = others_than(sings, around.location);
    const double cl = path_clearance(path, avoid);
    if (cl < clearance) {
        throw Error(ErrorKind::Geometry, "loop passes within " + std::to_string(cl) + " of a singular point");
    }
    if (!around.at_infinity) {
        const double d = path_clearance(path, {around.location});
        if (d < clearance) throw Error(ErrorKind::Geometry, "loop passes too close to the encircled point");
    }
    return fundamental_along_path(ode, lambda, path);
}

std::vector<Vector2C> eigen_directions(const Matrix2C& m) {
    const double scale = norm_of(m);
    const Complex half = 0.5 * m.trace();
    const Matrix2C n = m - half * Matrix2C::identity();
    if (norm_of(n) <= 1e-10 * scale) return {};
    const Complex disc = std::sqrt(half * half - m.det());
    if (2.0 * std::abs(disc) < 1e-4 * scale) {
        const Vector2C k1{n.a12, -n.a11}, k2{n.a22, -n.a21};
        return {unit(norm_of(k1) >= norm_of(k2) ? k1 : k2)};
    }
    std::vector<Vector2C> out;
    for (const Complex ev : {half + disc, half - disc}) {
        const Vector2C v1{m.a12, ev - m.a11}, v2{ev - m.a22, m.a21};
        out.push_back(unit(norm_of(v1) >= norm_of(v2) ? v1 : v2));
    }
    return out;
}

EigenvectorTest common_eigenvector_test(const Matrix2C& m1, const Matrix2C& m2, double tol) {
    for (const auto* m : {&m1, &m2}) {
        const double s = norm_of(*m);
        if (!(std::abs(m->det()) > 1e-14 * s * s)) throw Error(ErrorKind::NonInvertible, "monodromy matrix is singular");
    }
    const auto d1 = eigen_directions(m1), d2 = eigen_directions(m2);
    EigenvectorTest out;
    if (d1.empty() || d2.empty()) {
        out.common = true;
        out.angle = 0.0;
        out.vector = !d1.empty() ? d1.front() : (!d2.empty() ? d2.front() : Vector2C{1.0, 0.0});
        return out;
    }
    out.angle = INFINITY;
    for (const auto& u : d1) {
        for (const auto& v : d2) {
            const double a = principal_angle(u, v);
            if (a < out.angle) {
                out.angle = a;
                out.vector = u;
            }
        }
    }
    out.common = out.angle < tol;
    if (!out.common) out.vector.reset();
    return out;
}

MonodromyResult compute_monodromy(const SLProblem& p, Complex lambda, double tol) {
    const PSymbol ps = p_symbol(p, lambda);
    MonodromyResult r;
    r.base = default_base(p);
    r.m_minus = monodromy_matrix(p, lambda, ps.points[0], r.base);
    r.m_plus = monodromy_matrix(p, lambda, ps.points[1], r.base);
    r.m_third = monodromy_matrix(p, lambda, ps.points[2], r.base);
    const EigenvectorTest t = common_eigenvector_test(r.m_minus, r.m_plus, tol);
    r.triangularizable = t.common;
    r.common_eigenvector = t.vector;
    r.angle = t.angle;
    const double scale = norm_of(r.m_third) * norm_of(r.m_plus) * norm_of(r.m_minus);
    r.cycle_residual = norm_of(r.m_third * r.m_plus * r.m_minus - Matrix2C::identity()) / std::max(1.0, scale);
    return r;
}

bool monodromy_eigen_check(const SLProblem& p, Complex lambda, const SingularPoint& around, double tol) {
    const Matrix2C m = monodromy_matrix(p, lambda, around, default_base(p));
    const auto rho = indicial_roots(p, around, lambda);
    const Complex i2pi(0.0, kTwoPi);
    const Complex e1 = std::exp(i2pi * rho[0]), e2 = std::exp(i2pi * rho[1]);
    const double scale = std::max({1.0, std::abs(e1), std::abs(e2)});
    return std::abs(m.trace() - (e1 + e2)) <= tol * scale && std::abs(m.det() - e1 * e2) <= tol * scale * scale;
}

}  // namespace slgal
