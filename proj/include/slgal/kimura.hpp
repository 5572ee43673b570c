#pragma once

#include <array>
#include <utility>
#include <vector>

#include "slgal/defaults.hpp"
#include "slgal/frobenius.hpp"

namespace slgal {

struct KimuraReport {
    std::array<Complex, 4> sums{};
    int best_index = 0;
    long nearest_odd = 1;
    double distance = 0.0;  // |Re(best sum) - nearest_odd|
    bool triangularizable = false;
};

/// With rho_j the exponent differences: rho1+rho2+rho3, -rho1+rho2+rho3, rho1-rho2+rho3, rho1+rho2-rho3.
std::array<Complex, 4> kimura_sums(const PSymbol& ps);

KimuraReport kimura_report(const PSymbol& ps, double tol = defaults::kimura_tol);
KimuraReport is_triangularizable(const SLProblem& p, Complex lambda, double tol = defaults::kimura_tol);

struct CandidateEigenvalue {
    Complex lambda{};
    int k = 0;                         // signed sum equals 2k+1
    std::array<int, 3> sign_pattern{};  // (s1, s2, s3) of s1 r1 + s2 r2 + s3 rho3
    bool back_substituted = false;     // solves the unsquared equation
    bool in_window = false;
    bool verified_decay = false;
    bool bounded_solution = false;     // a terminating decaying hypergeometric solution exists
    double kimura_distance = 0.0;

    bool accepted() const { return back_substituted && in_window && verified_decay && bounded_solution; }
};

/// [max(nu-, nu+) + 1e-9, sup nu].
std::pair<double, double> default_window(const SLProblem& p);

/// Every root of the squared signed-sum equations with k in the reachable range, with the
/// outcome of each filter recorded. Unsorted, not deduplicated.
std::vector<CandidateEigenvalue> signed_sum_roots(const SLProblem& p, double lambda_min, double lambda_max);

/// Accepted roots, ascending in lambda, merged within 1e-9.
std::vector<CandidateEigenvalue> candidate_eigenvalues(const SLProblem& p, double lambda_min, double lambda_max);
/// Over default_window; empty when sup nu does not exceed max(nu-, nu+).
std::vector<CandidateEigenvalue> candidate_eigenvalues(const SLProblem& p);

/// Grid scan of the signed sums for odd-integer crossings, refined by bisection.
std::vector<CandidateEigenvalue> scan_eigenvalues(const SLProblem& p, double lambda_min, double lambda_max,
                                                  int grid_n = defaults::scan_grid);

}  // namespace slgal
