#pragma once

#include <optional>
#include <vector>

#include "slgal/defaults.hpp"
#include "slgal/frobenius.hpp"

namespace slgal {

struct HGParams {
    Complex a, b, c;
};

/// For a symbol already on (0, 1, inf): a = r1+ + r2+ + r3+, b = r1+ + r2+ + r3-, c = 1 + r1+ - r1-.
HGParams hypergeometric_reduction(const PSymbol& normalized);

/// Partial sum of 2F1(a, b; c; zeta). Exact when a or b is a non-positive integer.
Complex gauss_series(const HGParams& h, Complex zeta, int n_max = 10000);

/// psi = zeta^exp0 (1 - zeta)^exp1 sum_j coeffs[j] zeta^j, zeta = mobius(z).
struct EigenFunction {
    MobiusMap mobius;
    Complex exp0, exp1;
    std::vector<Complex> coeffs;
    Complex lambda;
    HGParams params;
};

/// The decaying terminating solution at lambda, if there is one.
std::optional<EigenFunction> build_eigenfunction(const SLProblem& p, Complex lambda,
                                                 double termination_tol = defaults::termination_tol);

Complex eval_eigenfunction(const EigenFunction& ef, const SLProblem& p, double x);

/// psi and d psi/dz at a complex z off the cuts; principal branches.
std::pair<Complex, Complex> eval_in_z(const EigenFunction& ef, Complex z);

/// max_x |psi'' + mu psi' + nu psi - lambda psi| / max_x |psi| with 5-point differences.
double residual(const SLProblem& p, Complex lambda, const EigenFunction& ef, const std::vector<double>& xs,
                double h = defaults::residual_step);

}  // namespace slgal
