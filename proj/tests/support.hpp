#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "slgal/problem.hpp"

namespace slgal::testing {

/// Seeded source of random problems and spectral parameters.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Complex complex(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }

    /// Hulthen parameters through (alpha1, alpha3, nu-), so alpha2 > 0 automatically.
    SLProblem hulthen(bool alpha1_one = false) {
        const double a1 = alpha1_one ? 1.0 : uniform(0.5, 2.5);
        const double a3 = uniform(2.0, 20.0);
        const double nu = uniform(0.0, 3.0);
        return make_hulthen(a1, a1 * nu + a3 / a1, a3);
    }

    SLProblem allen_cahn() { return make_allen_cahn(uniform(0.05, 0.95)); }

    SLProblem either() { return integer(0, 1) == 0 ? hulthen() : allen_cahn(); }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace slgal::testing
