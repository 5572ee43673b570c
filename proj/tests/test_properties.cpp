#include <doctest.h>

#include <cmath>

#include "slgal/eigenfunction.hpp"
#include "slgal/kimura.hpp"
#include "slgal/monodromy.hpp"
#include "slgal/oracle.hpp"
#include "support.hpp"

using namespace slgal;

TEST_CASE("decay region implies decay at both ends") {
    testing::Gen gen(41);
    for (int trial = 0; trial < 200; ++trial) {
        const SLProblem p = gen.either();
        const AsymptoticData d = endpoint_data(p);
        const Complex lam = gen.complex(-2, 3, -1, 1);
        const SpectrumClass c = classify_lambda(d, lam);
        if (c.tag == SpectrumTag::DiscreteCandidate) {
            CHECK(c.minus.kappa[0].real() > 0.0);
            CHECK(c.minus.kappa[1].real() < 0.0);
            CHECK(c.plus.kappa[0].real() > 0.0);
            CHECK(c.plus.kappa[1].real() < 0.0);
        }
    }
}

TEST_CASE("Mobius map sends the three points to 0, 1, infinity") {
    testing::Gen gen(43);
    for (int trial = 0; trial < 30; ++trial) {
        const SLProblem p = gen.hulthen();
        const PSymbol ps = p_symbol(p, gen.complex(0, 2, -1, 1));
        const MobiusMap m = normalize_to_01inf(ps).first;
        CHECK(std::abs(m(ps.points[0].location)) < 1e-12);
        CHECK(std::abs(m(ps.points[1].location) - 1.0) < 1e-12);
        if (ps.points[2].at_infinity) {
            CHECK(m.c == 0.0);
        } else {
            CHECK(std::abs(m.c * ps.points[2].location + m.d) < 1e-12 * (std::abs(m.c) + std::abs(m.d)));
        }
        CHECK(m.determinant() != 0.0);
    }
}

TEST_CASE("accepted eigenvalues pass every independent check") {
    testing::Gen gen(47);
    std::vector<double> xs;
    for (int i = 0; i <= 80; ++i) xs.push_back(-10.0 + 0.25 * i);
    for (int trial = 0; trial < 12; ++trial) {
        const SLProblem p = trial % 3 == 2 ? gen.allen_cahn() : gen.hulthen();
        for (const auto& c : candidate_eigenvalues(p)) {
            const auto ef = build_eigenfunction(p, c.lambda);
            REQUIRE(ef);
            CHECK(residual(p, c.lambda, *ef, xs) < 1e-6);
            CHECK(std::abs(shoot(p, c.lambda).miss) < 1e-5);
            CHECK(compute_monodromy(p, c.lambda).triangularizable);
        }
    }
}

TEST_CASE("oracle finds nothing beyond the closed-form set") {
    testing::Gen gen(53);
    for (int trial = 0; trial < 6; ++trial) {
        const SLProblem p = trial % 2 ? gen.allen_cahn() : gen.hulthen();
        const auto [lo, hi] = default_window(p);
        if (!(lo < hi)) continue;
        const auto closed = candidate_eigenvalues(p, lo, hi);
        const auto found = find_real_eigenvalues(p, lo, hi, 300);
        for (double l : found) {
            bool known = false;
            for (const auto& c : closed) known = known || std::abs(c.lambda.real() - l) < 1e-6;
            CHECK_MESSAGE(known, "oracle root " << l << " not in the closed-form set");
        }
    }
}

TEST_CASE("Kimura and monodromy agree off the spectrum") {
    testing::Gen gen(59);
    for (int trial = 0; trial < 20; ++trial) {
        const SLProblem p = gen.either();
        const Complex lam = gen.complex(-1, 2, -1, 1);
        CHECK(is_triangularizable(p, lam, 1e-6).triangularizable == compute_monodromy(p, lam, 1e-6).triangularizable);
    }
}

TEST_CASE("terminating Gauss series equals its polynomial") {
    testing::Gen gen(61);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = gen.integer(0, 8);
        const Complex b = gen.complex(-3, 3, -1, 1), c = gen.complex(0.5, 4, -1, 1), z = gen.complex(-3, 3, -3, 3);
        Complex term = 1.0, sum = 1.0;
        for (int j = 0; j < n; ++j) {
            term *= (double(j - n) * (b + double(j))) / ((c + double(j)) * double(j + 1)) * z;
            sum += term;
        }
        CHECK(std::abs(gauss_series({double(-n), b, c}, z) - sum) < 1e-10 * std::max(1.0, std::abs(sum)));
    }
}
