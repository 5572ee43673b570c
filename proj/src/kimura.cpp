#include "slgal/kimura.hpp"

#include <algorithm>
#include <cmath>

#include "slgal/asymptotics.hpp"
#include "slgal/eigenfunction.hpp"

namespace slgal {

namespace {

constexpr std::array<std::array<int, 3>, 4> kPatterns{{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};

long nearest_odd(double x) { return 2 * std::lround((x - 1.0) / 2.0) + 1; }

struct Endpoint {
    double a, mu, nu;
    double radicand(double lambda) const { return mu * mu + 4.0 * (lambda - nu); }
    double r(double lambda) const { return std::abs(a) * std::sqrt(std::max(0.0, radicand(lambda))); }
    Complex r_complex(double lambda) const { return std::abs(a) * std::sqrt(Complex(radicand(lambda))); }
    // r^2 = A lambda + B
    double A() const { return 4.0 * a * a; }
    double B() const { return a * a * (mu * mu - 4.0 * nu); }
};

std::array<Endpoint, 2> endpoints(const SLProblem& p) {
    const AsymptoticData d = endpoint_data(p);
    return {Endpoint{d.a_minus, d.mu_minus, d.nu_minus}, Endpoint{d.a_plus, d.mu_plus, d.nu_plus}};
}

/// Real roots of c2 x^2 + c1 x + c0, degree dropping when c2 is negligible against `scale`.
std::vector<double> real_roots(double c2, double c1, double c0, double scale) {
    if (std::abs(c2) <= 1e-14 * scale) {
        if (c1 == 0.0) return {};
        return {-c0 / c1};
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) {
        if (-disc > 1e-12 * c1 * c1) return {};
        disc = 0.0;
    }
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    if (q == 0.0) return {0.0};
    return {q / c2, c0 / q};
}

double rho3_difference(const SLProblem& p, const PSymbol& ps, double lambda) {
    const auto e = indicial_roots(p, ps.points[2], lambda);
    const Complex d = e[0] - e[1];
    return std::abs(d.imag()) > 1e-12 ? std::nan("") : d.real();
}

void check_supported(const SLProblem& p, const PSymbol& ps, double hi) {
    if (ps.points[2].source == SingularSource::ZeroOfF) {
        throw Error(ErrorKind::UnsupportedEquation,
                    "third singular point is a zero of f, so its exponents depend on lambda; use scan_eigenvalues");
    }
    const Complex d_lo = ps.difference(2);
    const auto e_hi = indicial_roots(p, ps.points[2], hi);
    if (std::abs((e_hi[0] - e_hi[1]) - d_lo) > 1e-9 * (1.0 + std::abs(d_lo))) {
        throw Error(ErrorKind::UnsupportedEquation,
                    "exponent difference at the third singular point depends on lambda; use scan_eigenvalues");
    }
}

void apply_filters(const SLProblem& p, CandidateEigenvalue& c, double lo, double hi) {
    const double lam = c.lambda.real();
    c.in_window = lam >= lo - 1e-12 && lam <= hi + 1e-12;
    const AsymptoticData d = endpoint_data(p);
    c.verified_decay = decay_condition(d, c.lambda, Side::Minus) && decay_condition(d, c.lambda, Side::Plus);
    c.kimura_distance = is_triangularizable(p, c.lambda).distance;
    if (c.back_substituted && c.in_window && c.verified_decay) {
        c.bounded_solution = build_eigenfunction(p, c.lambda).has_value();
    }
}

std::vector<CandidateEigenvalue> accepted_sorted(std::vector<CandidateEigenvalue> all) {
    std::vector<CandidateEigenvalue> acc;
    for (const auto& c : all) {
        if (c.accepted()) acc.push_back(c);
    }
    std::stable_sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
        return a.lambda.real() < b.lambda.real();
    });
    std::vector<CandidateEigenvalue> out;
    for (const auto& c : acc) {
        if (!out.empty() && std::abs(c.lambda - out.back().lambda) <= 1e-9) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::array<Complex, 4> kimura_sums(const PSymbol& ps) {
    const Complex r1 = ps.difference(0), r2 = ps.difference(1), r3 = ps.difference(2);
    return {r1 + r2 + r3, -r1 + r2 + r3, r1 - r2 + r3, r1 + r2 - r3};
}

KimuraReport kimura_report(const PSymbol& ps, double tol) {
    KimuraReport rep;
    rep.sums = kimura_sums(ps);
    double best = INFINITY;
    for (int i = 0; i < 4; ++i) {
        const long m = nearest_odd(rep.sums[i].real());
        const double dist = std::abs(rep.sums[i].real() - static_cast<double>(m));
        const double score = std::max(dist, std::abs(rep.sums[i].imag()));
        if (score < best) {
            best = score;
            rep.best_index = i;
            rep.nearest_odd = m;
            rep.distance = dist;
        }
    }
    rep.triangularizable = rep.distance < tol && std::abs(rep.sums[rep.best_index].imag()) < tol;
    return rep;
}

KimuraReport is_triangularizable(const SLProblem& p, Complex lambda, double tol) {
    return kimura_report(p_symbol(p, lambda), tol);
}

std::pair<double, double> default_window(const SLProblem& p) {
    const AsymptoticData d = endpoint_data(p);
    return {std::max(d.nu_minus, d.nu_plus) + 1e-9, sup_nu(p)};
}

std::vector<CandidateEigenvalue> signed_sum_roots(const SLProblem& p, double lo, double hi) {
    if (!(lo <= hi)) throw Error(ErrorKind::EmptyRange, "empty lambda range");
    const PSymbol ps = p_symbol(p, lo);
    check_supported(p, ps, hi);
    const double rho3 = rho3_difference(p, ps, lo);
    if (std::isnan(rho3)) return {};

    const auto ep = endpoints(p);
    double eff_lo = lo;
    for (const auto& e : ep) eff_lo = std::max(eff_lo, e.nu - e.mu * e.mu / 4.0);
    if (eff_lo > hi) return {};

    const double A1 = ep[0].A(), B1 = ep[0].B(), A2 = ep[1].A(), B2 = ep[1].B();
    const double SA = A1 + A2, SB = B1 + B2;
    std::vector<CandidateEigenvalue> out;
    for (const auto& sg : kPatterns) {
        auto lhs = [&](double lam) { return sg[0] * ep[0].r(lam) + sg[1] * ep[1].r(lam) + sg[2] * rho3; };
        double gmin = INFINITY, gmax = -INFINITY;
        const int n = 400;
        for (int i = 0; i <= n; ++i) {
            const double v = lhs(eff_lo + (hi - eff_lo) * i / n);
            gmin = std::min(gmin, v);
            gmax = std::max(gmax, v);
        }
        const long m_lo = nearest_odd(std::floor(gmin)) - 2, m_hi = nearest_odd(std::ceil(gmax)) + 2;
        for (long m = m_lo; m <= m_hi; m += 2) {
            // s1 r1 + s2 r2 = c; squared twice: 4 u v = (c^2 - u - v)^2 with u = A1 l + B1, v = A2 l + B2
            const double c = static_cast<double>(m) - sg[2] * rho3;
            const double C = c * c - SB;
            const double c2 = SA * SA - 4.0 * A1 * A2;
            const double c1 = -2.0 * C * SA - 4.0 * (A1 * B2 + A2 * B1);
            const double c0 = C * C - 4.0 * B1 * B2;
            for (double lam : real_roots(c2, c1, c0, SA * SA)) {
                auto residual = [&](double l) {
                    return double(sg[0]) * ep[0].r_complex(l) + double(sg[1]) * ep[1].r_complex(l) + sg[2] * rho3 -
                           static_cast<double>(m);
                };
                CandidateEigenvalue cand;
                cand.k = static_cast<int>((m - 1) / 2);
                cand.sign_pattern = sg;
                const double tol = defaults::back_substitution_tol * std::max(1.0, std::abs(static_cast<double>(m)));
                if (std::abs(residual(lam)) < tol) {
                    for (int it = 0; it < 3; ++it) {
                        const double r1 = ep[0].r(lam), r2 = ep[1].r(lam);
                        if (r1 <= 0.0 || r2 <= 0.0) break;
                        const double deriv = sg[0] * A1 / (2.0 * r1) + sg[1] * A2 / (2.0 * r2);
                        if (deriv == 0.0) break;
                        const double next = lam - residual(lam).real() / deriv;
                        if (!(std::abs(residual(next)) <= std::abs(residual(lam)))) break;
                        lam = next;
                    }
                    cand.back_substituted = std::abs(residual(lam)) < tol;
                }
                cand.lambda = lam;
                apply_filters(p, cand, lo, hi);
                out.push_back(cand);
            }
        }
    }
    return out;
}

std::vector<CandidateEigenvalue> candidate_eigenvalues(const SLProblem& p, double lo, double hi) {
    return accepted_sorted(signed_sum_roots(p, lo, hi));
}

std::vector<CandidateEigenvalue> candidate_eigenvalues(const SLProblem& p) {
    const auto [lo, hi] = default_window(p);
    if (!(lo <= hi)) return {};
    return candidate_eigenvalues(p, lo, hi);
}

std::vector<CandidateEigenvalue> scan_eigenvalues(const SLProblem& p, double lo, double hi, int grid_n) {
    if (grid_n < 100) throw Error(ErrorKind::InvalidParameter, "scan grid must have at least 100 points");
    if (!(lo < hi)) return {};
    const PSymbol ps0 = p_symbol(p, lo);
    auto sums_at = [&](double lam) {
        PSymbol ps = ps0;
        for (int j = 0; j < 3; ++j) ps.exponents[j] = indicial_roots(p, ps.points[j], lam);
        return kimura_sums(ps);
    };
    std::vector<double> grid(static_cast<std::size_t>(grid_n) + 1);
    std::vector<std::array<Complex, 4>> vals(grid.size());
    for (int i = 0; i <= grid_n; ++i) {
        grid[i] = lo + (hi - lo) * i / grid_n;
        vals[i] = sums_at(grid[i]);
    }
    std::vector<CandidateEigenvalue> out;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < grid_n; ++i) {
            const Complex sa = vals[i][j], sb = vals[i + 1][j];
            if (std::abs(sa.imag()) > 1e-9 || std::abs(sb.imag()) > 1e-9) continue;
            const double va = sa.real(), vb = sb.real();
            const double lo_v = std::min(va, vb), hi_v = std::max(va, vb);
            for (long m = nearest_odd(std::floor(lo_v)) - 2; m <= nearest_odd(std::ceil(hi_v)) + 2; m += 2) {
                const double md = static_cast<double>(m);
                // half-open so a crossing at a grid node is counted once
                if (!(md >= lo_v && md < hi_v) && !(i + 1 == grid_n && md == hi_v)) continue;
                double a = grid[i], b = grid[i + 1];
                double fa = va - md;
                while (b - a > 1e-10) {
                    const double mid = 0.5 * (a + b);
                    const double fm = sums_at(mid)[j].real() - md;
                    if ((fm < 0) == (fa < 0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                CandidateEigenvalue cand;
                cand.lambda = 0.5 * (a + b);
                cand.k = static_cast<int>((m - 1) / 2);
                cand.sign_pattern = kPatterns[static_cast<std::size_t>(j)];
                cand.back_substituted = true;
                apply_filters(p, cand, lo, hi);
                out.push_back(cand);
            }
        }
    }
    return accepted_sorted(std::move(out));
}

}  // namespace slgal
