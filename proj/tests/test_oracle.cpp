#include <doctest.h>

#include <cmath>

#include "slgal/eigenfunction.hpp"
#include "slgal/kimura.hpp"
#include "slgal/oracle.hpp"
#include "support.hpp"

using namespace slgal;

TEST_CASE("miss distance at and away from eigenvalues") {
    const SLProblem h = make_hulthen(1, 10, 10);
    const double top = std::pow((std::sqrt(41.0) - 1.0) / 4.0, 2);
    CHECK(std::abs(shoot(h, top, 40).miss) < 1e-6);
    CHECK(std::abs(shoot(h, 1.824609, 40).miss) < 1e-5);
    CHECK(std::abs(shoot(h, 1.0, 40).miss) > 0.1);
    for (double alpha : {0.2, 0.5, 0.8}) CHECK(std::abs(shoot(make_allen_cahn(alpha), 0.0, 40).miss) < 1e-6);
    CHECK_THROWS_AS(shoot(make_allen_cahn(0.3), -0.5), Error);
}

TEST_CASE("independent search") {
    const auto h = find_real_eigenvalues(make_hulthen(1, 10, 10), 0.01, 2.5, 500);
    REQUIRE(h.size() == 3);
    const double want[] = {0.123047, 0.723828, 1.824609};
    for (int i = 0; i < 3; ++i) CHECK(std::abs(h[i] - want[i]) < 1e-6);

    const auto a = find_real_eigenvalues(make_allen_cahn(0.35), -0.3499, 0.2, 500);
    REQUIRE(a.size() == 2);
    CHECK(std::abs(a[0] + 0.34125) < 1e-6);
    CHECK(std::abs(a[1]) < 1e-6);

    const auto b = find_real_eigenvalues(make_allen_cahn(0.3), -0.2999, 0.2, 500);
    REQUIRE(b.size() == 1);
    CHECK(std::abs(b[0]) < 1e-6);
    CHECK_THROWS_AS(find_real_eigenvalues(make_allen_cahn(0.3), -0.2, 0.2, 10), Error);
}

TEST_CASE("L-robustness at eigenvalues") {
    for (const SLProblem& p : {make_hulthen(1, 10, 10), make_allen_cahn(0.5)}) {
        for (const auto& c : candidate_eigenvalues(p)) {
            CHECK(std::abs(std::abs(shoot(p, c.lambda, 40).miss) - std::abs(shoot(p, c.lambda, 60).miss)) < 1e-4);
        }
    }
}

TEST_CASE("shooting profile matches the explicit eigenfunction") {
    std::vector<double> xs;
    for (int i = 0; i <= 80; ++i) xs.push_back(-10.0 + 0.25 * i);
    for (const SLProblem& p : {make_hulthen(1, 10, 10), make_allen_cahn(0.35)}) {
        for (const auto& c : candidate_eigenvalues(p)) {
            const auto ef = build_eigenfunction(p, c.lambda);
            REQUIRE(ef);
            const ShootReport r = shoot(p, c.lambda, 0.0, &xs);
            REQUIRE(r.samples);
            REQUIRE(r.samples->size() == xs.size());
            Complex num = 0.0;
            double den = 0.0;
            for (const auto& [x, v] : *r.samples) {
                num += std::conj(v) * eval_eigenfunction(*ef, p, x);
                den += std::norm(v);
            }
            const Complex scale = num / den;
            double peak = 0.0, worst = 0.0;
            for (const auto& [x, v] : *r.samples) {
                const Complex want = eval_eigenfunction(*ef, p, x);
                peak = std::max(peak, std::abs(want));
                worst = std::max(worst, std::abs(scale * v - want));
            }
            CHECK(worst / peak < 1e-5);
        }
    }
}

TEST_CASE("verification reports") {
    const SLProblem h = make_hulthen(1, 10, 10);
    const auto ok = verify(h, 1.824609, 1e-5);
    CHECK(ok.eigenvalue_confirmed);
    CHECK(ok.consistent);

    const auto no = verify(h, 2.4, 1e-5);
    CHECK(no.classification == SpectrumTag::DiscreteCandidate);
    CHECK_FALSE(no.kimura_triangularizable);
    CHECK_FALSE(no.shoot_ok);
    CHECK_FALSE(no.eigenvalue_confirmed);
    CHECK(no.consistent);

    const auto cont = verify(make_allen_cahn(0.3), -0.5, 1e-5);
    CHECK(cont.classification == SpectrumTag::ContinuousSpectrum);
    CHECK_FALSE(cont.discrete_checks_run);
}
