#include <doctest.h>

#include <cmath>

#include "slgal/asymptotics.hpp"
#include "slgal/problem.hpp"
#include "support.hpp"

using namespace slgal;

namespace {

double hulthen_nu(double a1, double a2, double a3, double x) {
    const double e = std::exp(x) + a1;
    return a2 / e - a3 / (e * e);
}

double allen_cahn_nu(double alpha, double x) {
    const double phi = 1.0 / (std::exp(x / std::sqrt(2.0)) + 1.0);
    return -3.0 * phi * phi + 2.0 * (1.0 + alpha) * phi - alpha;
}

SLProblem hulthen_clone(double a1, double a2, double a3) {
    const RealPoly d{-a1, a1 - 1.0};
    const RealPoly zm1{-1.0, 1.0};
    RationalFn h(a2 * (zm1 * d) - a3 * (zm1 * zm1), d * d);
    return SLProblem::custom(RealPoly{0.0, 1.0, -1.0}, RationalFn::constant(0.0), h, 0.0, 1.0, 0.5);
}

double five_point(const SLProblem& p, double x, double h) {
    auto z = [&](double t) { return heteroclinic_value(p, t); };
    return (z(x - 2 * h) - 8 * z(x - h) + 8 * z(x + h) - z(x + 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("Hulthen endpoint data and singular structure of h") {
    const SLProblem p = make_hulthen(1, 10, 10);
    const AsymptoticData d = endpoint_data(p);
    CHECK(d.nu_minus == doctest::Approx(0.0));
    CHECK(d.nu_plus == doctest::Approx(0.0));
    CHECK(heteroclinic_value(p, 0.0) == doctest::Approx(0.5));
    const auto c = coefficient_values(p, 0.0);
    CHECK(c.mu == doctest::Approx(0.0));
    CHECK(c.nu == doctest::Approx(2.5));
    CHECK(sup_nu(p) == doctest::Approx(2.5));

    const SLProblem q = make_hulthen(2, 1, 1);
    CHECK_THROWS_AS(q.h()(Complex(2.0)), Error);
}

TEST_CASE("Hulthen potential matches its closed form in x") {
    testing::Gen gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        const double a1 = gen.uniform(0.5, 2.5), a3 = gen.uniform(1.0, 20.0), a2 = a1 * gen.uniform(0.0, 3.0) + a3 / a1;
        const SLProblem p = make_hulthen(a1, a2, a3);
        for (double x : {-15.0, -3.0, 0.0, 0.7, 4.0, 15.0}) {
            CHECK(coefficient_values(p, x).nu == doctest::Approx(hulthen_nu(a1, a2, a3, x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("Allen-Cahn coefficients") {
    const SLProblem p = make_allen_cahn(0.5);
    const AsymptoticData d = endpoint_data(p);
    CHECK(d.mu_minus == doctest::Approx(0.0));
    CHECK(d.nu_minus == doctest::Approx(-0.5));
    CHECK(d.nu_plus == doctest::Approx(-0.5));
    CHECK(coefficient_values(p, 0.0).nu == doctest::Approx(0.25));
    CHECK(sup_nu(p) == doctest::Approx(0.25));

    const SLProblem q = make_allen_cahn(0.3);
    const AsymptoticData e = endpoint_data(q);
    CHECK(e.mu_plus == doctest::Approx(0.282843).epsilon(1e-6));
    CHECK(e.nu_minus == doctest::Approx(-0.7));
    CHECK(e.nu_plus == doctest::Approx(-0.3));
    for (double x : {-12.0, -1.0, 0.0, 2.5, 9.0}) {
        CHECK(coefficient_values(q, x).mu == doctest::Approx(std::sqrt(2.0) * 0.2));
        CHECK(coefficient_values(q, x).nu == doctest::Approx(allen_cahn_nu(0.3, x)).epsilon(1e-12));
    }
    CHECK(1.0 - heteroclinic_value(q, 40.0) < 2.0 * std::exp(-40.0 / std::sqrt(2.0)));

    CHECK_THROWS_AS(make_allen_cahn(0.0), Error);
    CHECK_THROWS_AS(make_allen_cahn(1.0), Error);
}

TEST_CASE("custom orbit agrees with the logistic closed form") {
    const SLProblem c = hulthen_clone(1, 10, 10);
    const SLProblem h = make_hulthen(1, 10, 10);
    CHECK(heteroclinic_value(c, 0.0) == doctest::Approx(0.5));
    double worst = 0.0;
    for (double x = -20.0; x <= 20.0; x += 0.5) {
        worst = std::max(worst, std::abs(heteroclinic_value(c, x) - heteroclinic_value(h, x)));
    }
    CHECK(worst < 1e-9);
    CHECK(std::abs(sup_nu(c) - 2.5) < 1e-9);
}

TEST_CASE("heteroclinic orbit solves dz/dx = f(z)") {
    for (const SLProblem& p : {make_hulthen(1, 10, 10), make_allen_cahn(0.3), hulthen_clone(2, 4, 3)}) {
        for (double x = -10.0; x <= 10.0; x += 0.25) {
            const double z = heteroclinic_value(p, x);
            CHECK(std::abs(five_point(p, x, 1e-3) - p.f()(z)) < 1e-8);
        }
    }
}

TEST_CASE("coefficients converge exponentially at both ends") {
    for (const SLProblem& p : {make_hulthen(1, 10, 10), make_hulthen(2, 4, 3), make_allen_cahn(0.3)}) {
        const AsymptoticData d = endpoint_data(p);
        for (int s : {-1, 1}) {
            const double lim = s < 0 ? d.nu_minus : d.nu_plus;
            const double rate = 1.0 / std::abs(s < 0 ? d.a_minus : d.a_plus);
            const double r = (coefficient_values(p, 20.0 * s).nu - lim) / (coefficient_values(p, 10.0 * s).nu - lim);
            const double expected = std::exp(-10.0 * rate);
            CHECK(r > expected / 3.0);
            CHECK(r < expected * 3.0);
        }
    }
}

TEST_CASE("invariant violations are reported") {
    CHECK_THROWS_AS(SLProblem::custom(RealPoly{0.0, 0.0, 1.0}, RationalFn::constant(0.0), RationalFn::constant(0.0),
                                      0.0, 1.0, 0.5),
                    Error);
    try {
        SLProblem::custom(RealPoly{0.0, 0.0, 1.0}, RationalFn::constant(0.0), RationalFn::constant(0.0), 0.0, 1.0, 0.5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
    }
    CHECK_THROWS_AS(make_hulthen(-1, 1, 1), Error);
}
