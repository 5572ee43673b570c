#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slgal/asymptotics.hpp"
#include "slgal/defaults.hpp"

namespace slgal {

struct ShootReport {
    Complex lambda;
    double L = 0.0;
    /// det[y_left, y_right](0) / (|y_left| |y_right|); zero exactly at eigenvalues.
    Complex miss;
    /// (x, psi) on the requested grid, scaled to agree with the left solution at x = 0.
    std::optional<std::vector<std::pair<double, Complex>>> samples;
};

/// max(40, 25 / min |Re kappa|) over the growing rate at -inf and the decaying rate at +inf,
/// capped at min(1000, 600 min |a+-|) so the orbit distance stays a normal double.
double default_shoot_length(const SLProblem& p, Complex lambda);

/// Integrates the first-order system from -L forward on the growing mode and from +L backward on the
/// decaying mode, and compares the two at x = 0. L <= 0 picks default_shoot_length.
ShootReport shoot(const SLProblem& p, Complex lambda, double L = 0.0, const std::vector<double>* sample_xs = nullptr);

/// Sign changes of the (real) miss on a uniform grid restricted to the decay region, bisected to 1e-9.
std::vector<double> find_real_eigenvalues(const SLProblem& p, double lambda_min, double lambda_max,
                                          int steps = defaults::oracle_steps);

struct VerificationReport {
    Complex lambda;
    SpectrumTag classification = SpectrumTag::NotEigenvalue;
    bool discrete_checks_run = false;

    bool kimura_triangularizable = false;
    double kimura_distance = 0.0;
    bool eigenfunction_found = false;
    double residual = 0.0;
    bool residual_ok = false;
    double miss = 0.0;
    bool shoot_ok = false;
    double monodromy_angle = 0.0;
    bool monodromy_triangularizable = false;

    bool eigenvalue_confirmed = false;  // every check says eigenvalue
    bool consistent = false;            // every check gives the same verdict
    std::vector<std::string> notes;
};

VerificationReport verify(const SLProblem& p, Complex lambda, double tol = defaults::verify_tol);

}  // namespace slgal
