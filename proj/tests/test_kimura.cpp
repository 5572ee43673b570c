#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "slgal/kimura.hpp"
#include "support.hpp"

using namespace slgal;

namespace {

std::vector<double> lambdas(const std::vector<CandidateEigenvalue>& c) {
    std::vector<double> out;
    for (const auto& e : c) out.push_back(e.lambda.real());
    return out;
}

}  // namespace

TEST_CASE("signed sums") {
    const auto a = kimura_sums(p_symbol(make_allen_cahn(0.5), 0.0));
    CHECK(std::abs(a[0] - 9.0) < 1e-12);
    CHECK(std::abs(a[1] - 5.0) < 1e-12);
    CHECK(std::abs(a[2] - 5.0) < 1e-12);
    CHECK(std::abs(a[3] + 1.0) < 1e-12);

    const auto h = kimura_sums(p_symbol(make_hulthen(1, 10, 10), 1.824609));
    CHECK(h[3].real() == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("triangularizability verdicts") {
    const SLProblem h = make_hulthen(1, 10, 10);
    CHECK_FALSE(is_triangularizable(h, 1.0, 1e-6).triangularizable);
    CHECK(is_triangularizable(h, 0.723828, 1e-6).triangularizable);
    CHECK_FALSE(is_triangularizable(h, Complex(0.31, 0.2)).triangularizable);
    testing::Gen gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(is_triangularizable(make_allen_cahn(gen.uniform(0.05, 0.95)), 0.0).triangularizable);
    }
}

TEST_CASE("independent closed form for Hulthen with alpha1 = 1") {
    // a2 = a3 puts both edge values at zero; the exponents at infinity differ by sqrt(1 + 4 a3)
    testing::Gen gen(29);
    for (int trial = 0; trial < 15; ++trial) {
        const double a3 = gen.uniform(2.0, 30.0);
        const SLProblem p = make_hulthen(1.0, a3, a3);
        const double r3 = std::sqrt(1.0 + 4.0 * a3);
        std::vector<double> expected;
        for (int n = 0;; ++n) {
            const double s = (r3 - (2 * n + 1)) / 4.0;
            if (s <= 1e-6) break;
            expected.push_back(s * s);
        }
        std::sort(expected.begin(), expected.end());
        const auto got = lambdas(candidate_eigenvalues(p));
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-10);
    }
}

TEST_CASE("Hulthen eigenvalues with branch indices") {
    const auto c = candidate_eigenvalues(make_hulthen(1, 10, 10), 0.0, 2.5);
    REQUIRE(c.size() == 3);
    const double sq[] = {0.350781, 0.850781, 1.350781};
    const int ks[] = {-3, -2, -1};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::sqrt(c[i].lambda.real()) == doctest::Approx(sq[i]).epsilon(1e-6));
        CHECK(c[i].k == ks[i]);
    }
}

TEST_CASE("Allen-Cahn eigenvalues") {
    const auto c = lambdas(candidate_eigenvalues(make_allen_cahn(0.35), -0.35, 0.211));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(-0.34125));
    CHECK(std::abs(c[1]) < 1e-12);

    const auto all = signed_sum_roots(make_allen_cahn(0.3), -0.7, 0.211);
    const auto it = std::find_if(all.begin(), all.end(), [](const auto& e) {
        return std::abs(e.lambda.real() + 0.315) < 1e-9 && e.back_substituted;
    });
    REQUIRE(it != all.end());
    CHECK_FALSE(it->verified_decay);
    CHECK_FALSE(it->accepted());
    const auto c3 = lambdas(candidate_eigenvalues(make_allen_cahn(0.3)));
    REQUIRE(c3.size() == 1);
    CHECK(std::abs(c3[0]) < 1e-12);
}

TEST_CASE("grid scan agrees with the closed form") {
    const auto s = scan_eigenvalues(make_hulthen(1, 10, 10), 0.0, 2.5, 2000);
    const auto c = candidate_eigenvalues(make_hulthen(1, 10, 10), 0.0, 2.5);
    REQUIRE(s.size() == c.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i].lambda - c[i].lambda) < 1e-8);

    const auto a = lambdas(scan_eigenvalues(make_allen_cahn(0.5), -0.4999, 0.25));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == doctest::Approx(-0.375));
    CHECK(std::abs(a[1]) < 1e-8);
}

TEST_CASE("empty window") {
    CHECK_THROWS_AS(candidate_eigenvalues(make_hulthen(1, 10, 10), 2.0, 1.0), Error);
}
