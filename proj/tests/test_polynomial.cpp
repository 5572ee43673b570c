#include <doctest.h>

#include <algorithm>

#include "slgal/polynomial.hpp"
#include "support.hpp"

using namespace slgal;

TEST_CASE("evaluation, derivative and Taylor shift") {
    const RealPoly p{1.0, -3.0, 0.0, 2.0};
    CHECK(p.degree() == 3);
    CHECK(p(2.0) == doctest::Approx(11.0));
    CHECK(p.derivative()(2.0) == doctest::Approx(21.0));

    const auto t = p.taylor_shift(Complex(2.0));
    CHECK(std::abs(t[0] - Complex(11.0)) < 1e-12);
    CHECK(std::abs(t[1] - Complex(21.0)) < 1e-12);
    CHECK(std::abs(t[2] - Complex(12.0)) < 1e-12);
    CHECK(std::abs(t[3] - Complex(2.0)) < 1e-12);

    CHECK(RealPoly{0.0, 0.0}.is_zero());
    CHECK(p.reversed(3).coeffs() == std::vector<double>{2.0, 0.0, -3.0, 1.0});
    CHECK(p.shifted(2).degree() == 5);
}

TEST_CASE("roots reproduce the coefficients (Vieta)") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen.integer(1, 6);
        std::vector<Complex> r;
        for (int i = 0; i < n; ++i) r.push_back(gen.complex(-3, 3, -3, 3));
        ComplexPoly p{Complex(1.0)};
        for (const auto& z : r) p = p * ComplexPoly{-z, Complex(1.0)};
        const auto found = roots(p);
        REQUIRE(found.size() == r.size());
        ComplexPoly q{Complex(1.0)};
        for (const auto& z : found) q = q * ComplexPoly{-z, Complex(1.0)};
        for (int k = 0; k <= n; ++k) CHECK(std::abs(q[k] - p[k]) < 1e-9 * (1.0 + std::abs(p[k])));
    }
}

TEST_CASE("rational functions refuse to evaluate at poles") {
    const RationalFn r(RealPoly{1.0}, RealPoly{-2.0, 1.0});
    CHECK(r(3.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(r(2.0), Error);
    CHECK_THROWS_AS(RationalFn(RealPoly{1.0}, RealPoly{}), Error);
    const RationalFn d = r.derivative();
    CHECK(d(3.0) == doctest::Approx(-1.0));
}
