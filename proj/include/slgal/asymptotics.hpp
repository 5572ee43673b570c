#pragma once

#include <array>
#include <string_view>

#include "slgal/defaults.hpp"
#include "slgal/linalg.hpp"
#include "slgal/problem.hpp"

namespace slgal {

enum class Side { Minus, Plus };

enum class Theorem2Case { I, II, III, IV, V, None };
std::string_view to_string(Theorem2Case c);

enum class SpectrumTag { DiscreteCandidate, ContinuousSpectrum, NotEigenvalue };
std::string_view to_string(SpectrumTag t);

struct SideReport {
    std::array<Complex, 2> kappa;  // descending real part
    bool decay_ok = false;
};

struct SpectrumClass {
    SpectrumTag tag = SpectrumTag::NotEigenvalue;
    SideReport minus, plus;
    bool boundary = false;  // some Re(kappa) vanishes within the boundary tolerance
};

AsymptoticData endpoint_data(const SLProblem& p);

/// A(lambda) = [[0, 1], [lambda - nu, -mu]] at the given end.
Matrix2C asymptotic_matrix(const AsymptoticData& d, Complex lambda, Side side);

/// Roots of s^2 + mu s - (lambda - nu) = 0, descending real part.
std::array<Complex, 2> edge_rates(const AsymptoticData& d, Complex lambda, Side side);

/// Re sqrt(mu^2 + 4(lambda - nu)) > |mu| on the principal branch.
bool decay_condition(const AsymptoticData& d, Complex lambda, Side side);

/// 16 mu^2 (Re lambda - nu) + (Im lambda)^2 > 0. Diagnostic only; not used for classification.
bool printed_condition(const AsymptoticData& d, Complex lambda, Side side);

Theorem2Case theorem2_case(const AsymptoticData& d);

/// Decision table on the edge rates alone.
SpectrumClass classify_lambda(const AsymptoticData& d, Complex lambda,
                              double boundary_tol = defaults::boundary_tol);

/// classify_lambda, with DiscreteCandidate demoted to NotEigenvalue where no eigenvalue can sit:
/// real lambda above sup nu, or a lambda at which the monodromy group is not triangularizable.
SpectrumClass classify_spectrum(const SLProblem& p, Complex lambda, double kimura_tol = defaults::kimura_tol);

}  // namespace slgal
