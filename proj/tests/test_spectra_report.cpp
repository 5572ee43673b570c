#include <doctest.h>

#include <cmath>
#include <sstream>

#include "slgal/spectra_report.hpp"

using namespace slgal;

namespace {

std::vector<double> roots_at(const SweepTable& t, double param) {
    for (const auto& row : t.rows) {
        if (std::abs(row.param - param) < 1e-12) {
            std::vector<double> out;
            for (const auto& e : row.eigenvalues) out.push_back(e.lambda.real());
            return out;
        }
    }
    return {};
}

}  // namespace

TEST_CASE("Hulthen sweep") {
    const SweepTable t = sweep_hulthen(1, 10, 0.0, 3.5, 15);
    CHECK(t.sqrt_bounds);
    const auto r0 = roots_at(t, 0.0);
    REQUIRE(r0.size() == 3);
    CHECK(std::sqrt(r0[0]) == doctest::Approx(1.350781).epsilon(1e-6));
    CHECK(std::sqrt(r0[2]) == doctest::Approx(0.350781).epsilon(1e-6));
    const auto r35 = roots_at(t, 3.5);
    REQUIRE_FALSE(r35.empty());
    CHECK(std::abs(std::sqrt(r35[0]) - 1.99855) < 1e-4);
    const auto r15 = roots_at(t, 1.5);
    bool hit = false;
    for (double l : r15) hit = hit || std::abs(std::sqrt(l) - 1.29155) < 1e-4;
    CHECK(hit);
    for (const auto& row : t.rows) {
        for (const auto& e : row.eigenvalues) {
            CHECK(std::sqrt(e.lambda.real()) > row.bound_lo);
            CHECK(std::sqrt(e.lambda.real()) < row.bound_hi);
        }
    }
}

TEST_CASE("Allen-Cahn sweep") {
    const SweepTable t = sweep_allen_cahn(0.2, 0.5, 10);
    CHECK(roots_at(t, 0.2).size() == 1);
    const auto half = roots_at(t, 0.5);
    REQUIRE(half.size() == 2);
    CHECK(half[0] == doctest::Approx(-0.375));
    const SweepTable third = sweep_allen_cahn(1.0 / 3.0, 1.0 / 3.0 + 1e-3, 2);
    CHECK(third.rows.front().eigenvalues.size() == 1);
    CHECK_THROWS_AS(sweep_allen_cahn(0.0, 0.5, 5), Error);
}

TEST_CASE("sweep CSV") {
    std::ostringstream out;
    write_sweep_csv(sweep_hulthen(1, 10, 0.0, 0.5, 2), out);
    std::istringstream in(out.str());
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "param,branch_k,lambda,sqrt_lambda,bound_lo,bound_hi");
    CHECK(first.rfind("0,-1,", 0) == 0);
}

TEST_CASE("region grid") {
    const SLProblem p = make_allen_cahn(0.3);
    const RegionGrid g = region_grid(p, -1.2, 0.2, -1.0, 1.0, 200);
    auto cell = [&](double re, double im) {
        const int i = static_cast<int>((re - g.re_lo) / (g.re_hi - g.re_lo) * g.res);
        const int j = static_cast<int>((im - g.im_lo) / (g.im_hi - g.im_lo) * g.res);
        return g.at(i, j);
    };
    CHECK(cell(-0.5, 0.0) == 'C');
    CHECK(cell(0.1, 0.0) != 'C');
    CHECK(cell(-0.3, 0.0) == 'B');
    const AsymptoticData d = endpoint_data(p);
    for (int j = 0; j < g.res; ++j) {
        for (int i = 0; i < g.res; ++i) {
            CHECK(g.at(i, j) == g.at(i, g.res - 1 - j));
            if (g.at(i, j) != 'B') {
                const char want = "DCN"[static_cast<int>(classify_lambda(d, Complex(g.re_at(i), g.im_at(j))).tag)];
                CHECK(g.at(i, j) == want);
            }
        }
    }
    std::ostringstream out;
    write_region_csv(region_grid(p, -1, 0, -1, 1, 10), out);
    CHECK(out.str().rfind("lam_re,lam_im,class\n", 0) == 0);
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(NAN) == "nan");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
