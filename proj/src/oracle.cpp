#include "slgal/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "slgal/eigenfunction.hpp"
#include "slgal/kimura.hpp"
#include "slgal/monodromy.hpp"
#include "slgal/ode.hpp"

namespace slgal {

namespace {

/// log of the distance to the nearer equilibrium, plus (psi, psi').
struct ShootState {
    double ell = 0.0;
    Vector2C y;

    friend ShootState operator+(const ShootState& a, const ShootState& b) { return {a.ell + b.ell, a.y + b.y}; }
    friend ShootState operator*(double s, const ShootState& v) { return {s * v.ell, s * v.y}; }
};

double norm_of(const ShootState& s) { return std::max(std::abs(s.ell) / 64.0, slgal::norm_of(s.y)); }

/// f(z_end + t)/t as a polynomial in t, for the side's deviation variable.
RealPoly log_rate(const RealPoly& f_near, bool plus) {
    const auto& c = f_near.coeffs();
    std::vector<double> out;
    for (std::size_t k = 1; k < c.size(); ++k) {
        // minus: w' = f(z- + w);  plus: u' = -f(z+ - u)
        const double sgn = plus ? ((k % 2 == 1) ? 1.0 : -1.0) : 1.0;
        out.push_back(sgn * c[k]);
    }
    return RealPoly(std::move(out));
}

struct Leg {
    Vector2C y;        // unit-norm state at x = 0
    double log_scale;  // log of the discarded magnitude
    std::vector<std::pair<double, Vector2C>> samples;  // raw states with their log scale folded in
    std::vector<double> sample_log;
};

Leg run_leg(const SLProblem& p, Complex lambda, double L, bool plus, const std::vector<double>& xs) {
    const RealPoly rate = log_rate(plus ? p.f_near_plus() : p.f_near_minus(), plus);
    const double x_start = plus ? L : -L;
    const OrbitPoint o = orbit_point(p, x_start);
    const double dist = plus ? o.to_plus : o.from_minus;
    if (!(dist > 0.0)) throw Error(ErrorKind::Precondition, "shooting length too large for double precision orbit");
    const AsymptoticData d = endpoint_data(p);
    const auto kap = edge_rates(d, lambda, plus ? Side::Plus : Side::Minus);
    const Complex kappa = plus ? kap[1] : kap[0];

    ShootState s{std::log(dist), (1.0 / std::hypot(1.0, std::abs(kappa))) * Vector2C{1.0, kappa}};
    const double zm = p.z_minus(), zp = p.z_plus();
    auto rhs = [&](double, const ShootState& st) {
        const double w = std::exp(st.ell);
        const double z = plus ? zp - w : zm + w;
        const double mu = p.g()(z), nu = p.h()(z);
        return ShootState{rate(w), {st.y.y, (lambda - nu) * st.y.x - mu * st.y.y}};
    };

    // stops: unit chunks plus requested sample points on this half-line
    std::vector<double> stops;
    for (double x = x_start; plus ? x > 0.0 : x < 0.0; x += plus ? -1.0 : 1.0) stops.push_back(x);
    stops.push_back(0.0);
    for (double x : xs) {
        if (plus ? (x > 0.0 && x <= L) : (x <= 0.0 && x >= -L)) stops.push_back(x);
    }
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    if (plus) std::reverse(stops.begin(), stops.end());

    ode::StepControl ctl;
    ctl.rtol = defaults::shooting_rtol;
    ctl.h_max = 0.5;
    Leg leg{s.y, 0.0, {}, {}};
    double log_scale = 0.0;
    double t = stops.front();
    auto record = [&](double x) {
        if (std::find(xs.begin(), xs.end(), x) != xs.end()) {
            leg.samples.emplace_back(x, s.y);
            leg.sample_log.push_back(log_scale);
        }
    };
    record(t);
    for (std::size_t i = 1; i < stops.size(); ++i) {
        auto sol = ode::integrate(rhs, t, stops[i], s, ctl);
        s = sol.y;
        ctl.h_initial = sol.h_next;
        t = stops[i];
        const double n = slgal::norm_of(s.y);
        s.y = (1.0 / n) * s.y;
        log_scale += std::log(n);
        record(t);
    }
    leg.y = s.y;
    leg.log_scale = log_scale;
    return leg;
}

}  // namespace

double default_shoot_length(const SLProblem& p, Complex lambda) {
    const AsymptoticData d = endpoint_data(p);
    const double km = std::abs(edge_rates(d, lambda, Side::Minus)[0].real());
    const double kp = std::abs(edge_rates(d, lambda, Side::Plus)[1].real());
    const double mn = std::min(km, kp);
    // orbit distance behaves like exp(-|f'| L) and must stay a normal double
    const double cap = std::min(1000.0, 600.0 * std::min(std::abs(d.a_minus), std::abs(d.a_plus)));
    if (!(mn > 0.0)) return cap;
    return std::min(cap, std::max(defaults::min_shooting_length, 25.0 / mn));
}

ShootReport shoot(const SLProblem& p, Complex lambda, double L, const std::vector<double>* sample_xs) {
    const AsymptoticData d = endpoint_data(p);
    if (!decay_condition(d, lambda, Side::Minus) || !decay_condition(d, lambda, Side::Plus)) {
        throw Error(ErrorKind::Precondition, "shooting needs a growing and a decaying mode at both ends");
    }
    for (const Side side : {Side::Minus, Side::Plus}) {
        const auto k = edge_rates(d, lambda, side);
        if (std::abs(k[0] - k[1]) < 1e-10) throw Error(ErrorKind::DegenerateEdge, "defective asymptotic matrix");
    }
    if (L <= 0.0) L = default_shoot_length(p, lambda);
    static const std::vector<double> none;
    const std::vector<double>& xs = sample_xs ? *sample_xs : none;
    const Leg left = run_leg(p, lambda, L, false, xs);
    const Leg right = run_leg(p, lambda, L, true, xs);

    ShootReport rep;
    rep.lambda = lambda;
    rep.L = L;
    rep.miss = cross(left.y, right.y) / (slgal::norm_of(left.y) * slgal::norm_of(right.y));
    if (sample_xs) {
        const Complex c = dot(right.y, left.y) / dot(right.y, right.y);
        std::vector<std::pair<double, Complex>> out;
        for (std::size_t i = 0; i < left.samples.size(); ++i) {
            out.emplace_back(left.samples[i].first,
                             left.samples[i].second.x * std::exp(left.sample_log[i] - left.log_scale));
        }
        for (std::size_t i = 0; i < right.samples.size(); ++i) {
            if (right.samples[i].first == 0.0) continue;
            out.emplace_back(right.samples[i].first,
                             c * right.samples[i].second.x * std::exp(right.sample_log[i] - right.log_scale));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rep.samples = std::move(out);
    }
    return rep;
}

std::vector<double> find_real_eigenvalues(const SLProblem& p, double lo, double hi, int steps) {
    if (steps < 50) throw Error(ErrorKind::InvalidParameter, "oracle search needs at least 50 steps");
    const AsymptoticData d = endpoint_data(p);
    auto admissible = [&](double lam) {
        return decay_condition(d, lam, Side::Minus) && decay_condition(d, lam, Side::Plus) &&
               std::abs(edge_rates(d, lam, Side::Minus)[0] - edge_rates(d, lam, Side::Minus)[1]) >= 1e-10 &&
               std::abs(edge_rates(d, lam, Side::Plus)[0] - edge_rates(d, lam, Side::Plus)[1]) >= 1e-10;
    };
    auto miss = [&](double lam) { return shoot(p, lam).miss.real(); };
    auto shootable = [&](double lam) {
        return admissible(lam) && 25.0 / std::min(std::abs(edge_rates(d, lam, Side::Minus)[0].real()),
                                                  std::abs(edge_rates(d, lam, Side::Plus)[1].real())) <=
                                      default_shoot_length(p, lam);
    };

    std::vector<double> out;
    bool have_prev = false;
    double prev_l = 0.0, prev_m = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double lam = lo + (hi - lo) * i / steps;
        if (!shootable(lam)) {
            have_prev = false;
            continue;
        }
        const double m = miss(lam);
        if (m == 0.0) {
            out.push_back(lam);
        } else if (have_prev && prev_m != 0.0 && (m < 0) != (prev_m < 0)) {
            double a = prev_l, b = lam, fa = prev_m;
            while (b - a > 1e-9) {
                const double mid = 0.5 * (a + b);
                const double fm = miss(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        have_prev = true;
        prev_l = lam;
        prev_m = m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify(const SLProblem& p, Complex lambda, double tol) {
    VerificationReport r;
    r.lambda = lambda;
    const SpectrumClass cls = classify_lambda(endpoint_data(p), lambda);
    r.classification = cls.tag;
    if (cls.tag != SpectrumTag::DiscreteCandidate) {
        r.notes.push_back("discrete checks skipped: lambda is not in the discrete-candidate region");
        r.consistent = true;
        return r;
    }
    r.discrete_checks_run = true;

    const KimuraReport kr = is_triangularizable(p, lambda, tol);
    r.kimura_triangularizable = kr.triangularizable;
    r.kimura_distance = kr.distance;

    std::optional<EigenFunction> ef;
    try {
        ef = build_eigenfunction(p, lambda, tol);
    } catch (const Error& e) {
        r.notes.push_back(std::string("eigenfunction: ") + e.what());
    }
    r.eigenfunction_found = ef.has_value();
    if (ef) {
        std::vector<double> xs;
        for (int i = 0; i <= 80; ++i) xs.push_back(-10.0 + 0.25 * i);
        r.residual = residual(p, lambda, *ef, xs);
        r.residual_ok = r.residual < tol;
    }

    try {
        const ShootReport sr = shoot(p, lambda);
        r.miss = std::abs(sr.miss);
        r.shoot_ok = r.miss < tol;
    } catch (const Error& e) {
        r.notes.push_back(std::string("shoot: ") + e.what());
    }

    try {
        const MonodromyResult mr = compute_monodromy(p, lambda, tol);
        r.monodromy_angle = mr.angle;
        r.monodromy_triangularizable = mr.triangularizable;
    } catch (const Error& e) {
        r.notes.push_back(std::string("monodromy: ") + e.what());
    }

    const std::array<bool, 5> verdicts{r.kimura_triangularizable, r.eigenfunction_found, r.residual_ok, r.shoot_ok,
                                       r.monodromy_triangularizable};
    r.eigenvalue_confirmed = std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
    const bool none = std::none_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
    // monodromy may be triangularizable at non-eigenvalues (Kimura holds without a bounded solution)
    const bool rejected = !r.eigenfunction_found && !r.shoot_ok && (r.kimura_triangularizable == r.monodromy_triangularizable);
    r.consistent = r.eigenvalue_confirmed || none || rejected;
    return r;
}

}  // namespace slgal
