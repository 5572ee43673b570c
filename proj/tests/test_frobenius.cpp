#include <doctest.h>

#include <cmath>

#include "slgal/frobenius.hpp"
#include "support.hpp"

using namespace slgal;

TEST_CASE("transformed equation coefficients") {
    const ComplexODE h = transformed_equation(make_hulthen(1, 10, 10));
    for (const Complex z : {Complex(0.3, 0.1), Complex(-2.0, 1.0), Complex(4.0, -3.0)}) {
        CHECK(std::abs(h.p(z) - (2.0 * z - 1.0) / (z * (z - 1.0))) < 1e-12);
    }
    const double alpha = 0.3;
    const ComplexODE a = transformed_equation(make_allen_cahn(alpha));
    for (const Complex z : {Complex(0.3, 0.1), Complex(-2.0, 1.0)}) {
        CHECK(std::abs(a.p(z) - 2.0 * (z + alpha - 1.0) / (z * (z - 1.0))) < 1e-12);
    }
    CHECK_THROWS_AS(h.p(0.0), Error);
}

TEST_CASE("singularity census") {
    auto locations = [](const SLProblem& p) {
        std::vector<std::string> out;
        for (const auto& s : singularities(p)) {
            CHECK(s.kind == SingularKind::Regular);
            out.push_back(s.label());
        }
        return out;
    };
    const auto h2 = singularities(make_hulthen(2, 1, 1));
    REQUIRE(h2.size() == 3);
    CHECK(std::abs(h2[2].location - 2.0) < 1e-12);
    CHECK_FALSE(h2[2].at_infinity);
    CHECK(h2[2].source == SingularSource::PoleOfH);

    const auto h1 = singularities(make_hulthen(1, 1, 1));
    REQUIRE(h1.size() == 3);
    CHECK(h1[2].at_infinity);

    CHECK(locations(make_allen_cahn(0.3)).size() == 3);
    CHECK(singularities(make_allen_cahn(0.3))[2].at_infinity);
}

TEST_CASE("local exponents") {
    const SLProblem h = make_hulthen(1, 10, 10);
    const auto r0 = indicial_roots(h, endpoint_point(h, false), 1.824609);
    CHECK(r0[0].real() == doctest::Approx(std::sqrt(1.824609)));
    CHECK(r0[1].real() == doctest::Approx(-std::sqrt(1.824609)));
    const auto rinf = indicial_roots(h, SingularPoint::infinity(), 1.0);
    CHECK(rinf[0].real() == doctest::Approx((1.0 + std::sqrt(41.0)) / 2.0));
    CHECK(rinf[1].real() == doctest::Approx((1.0 - std::sqrt(41.0)) / 2.0));

    const SLProblem a = make_allen_cahn(0.3);
    const auto ainf = indicial_roots(a, SingularPoint::infinity(), 0.0);
    CHECK(std::abs(ainf[0] - 3.0) < 1e-12);
    CHECK(std::abs(ainf[1] + 2.0) < 1e-12);
}

TEST_CASE("P-symbol exponent differences") {
    const PSymbol a = p_symbol(make_allen_cahn(0.3), 0.0);
    CHECK(std::abs(a.difference(0) - 2.4) < 1e-12);
    CHECK(std::abs(a.difference(1) - 1.6) < 1e-12);
    CHECK(std::abs(a.difference(2) - 5.0) < 1e-12);
    CHECK(a.integer_difference[2]);

    const PSymbol h = p_symbol(make_hulthen(1, 10, 10), 1.824609);
    CHECK(h.difference(0).real() == doctest::Approx(2.701562).epsilon(1e-6));
    CHECK(h.difference(1).real() == doctest::Approx(2.701562).epsilon(1e-6));
    CHECK(h.difference(2).real() == doctest::Approx(6.403124).epsilon(1e-6));
}

TEST_CASE("Fuchs relation and Vieta residuals on random problems") {
    testing::Gen gen(17);
    for (int trial = 0; trial < 60; ++trial) {
        const SLProblem p = gen.either();
        const Complex lam = gen.complex(-2, 3, -2, 2);
        const PSymbol ps = p_symbol(p, lam);
        CHECK(std::abs(ps.fuchs_sum() - 1.0) < 1e-10);
        for (const auto& pt : ps.points) {
            const auto bc = indicial_coefficients(p, pt, lam);
            const auto r = indicial_roots(p, pt, lam);
            CHECK(std::abs(r[0] + r[1] + bc[0]) < 1e-12 * (1.0 + std::abs(bc[0])));
            CHECK(std::abs(r[0] * r[1] - bc[1]) < 1e-12 * (1.0 + std::abs(bc[1])));
        }
    }
}

TEST_CASE("Mobius normalization") {
    const SLProblem h = make_hulthen(2, 1, 1);
    const auto [m, ps] = normalize_to_01inf(p_symbol(h, 0.5));
    CHECK(std::abs(m(0.0)) < 1e-15);
    CHECK(std::abs(m(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(m.c * 2.0 + m.d) < 1e-15);
    for (const Complex z : {Complex(0.3), Complex(0.9, 0.2)}) CHECK(std::abs(m(z) - z / (2.0 - z)) < 1e-14);
    const PSymbol orig = p_symbol(h, 0.5);
    for (int j = 0; j < 3; ++j) {
        CHECK(ps.exponents[j][0] == orig.exponents[j][0]);
        CHECK(ps.exponents[j][1] == orig.exponents[j][1]);
    }
    CHECK(normalize_to_01inf(p_symbol(make_allen_cahn(0.4), 0.0)).first.is_identity());

    for (double x : {-30.0, -1.0, 0.0, 2.0, 30.0}) {
        const OrbitPoint o = orbit_point(h, x);
        const auto [zeta, one_minus] = mobius_on_orbit(m, h, o);
        CHECK(std::abs(zeta - m(o.z).real()) < 1e-14);
        CHECK(std::abs(one_minus - (1.0 - zeta)) < 1e-14);
        CHECK(one_minus > 0.0);
    }
}

TEST_CASE("out-of-scope equations") {
    const RealPoly f{0.0, 1.0, -1.0};
    const SLProblem four = SLProblem::custom(f, RationalFn::constant(0.0),
                                             RationalFn(RealPoly{1.0}, RealPoly{9.0, 0.0, 1.0}), 0.0, 1.0, 0.5);
    try {
        p_symbol(four, 0.5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfScope);
    }
}
