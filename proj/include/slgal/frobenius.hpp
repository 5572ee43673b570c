#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slgal/linalg.hpp"
#include "slgal/polynomial.hpp"
#include "slgal/problem.hpp"

namespace slgal {

/// psi'' + p(z) psi' + q(z, lambda) psi = 0 with
/// p = (g + f')/f and q = (h - lambda)/f^2, both as ratios of polynomials.
struct ComplexODE {
    ComplexPoly p_num, p_den;
    ComplexPoly q_num0, q_num1, q_den;  // q = (q_num0 - lambda q_num1) / q_den

    Complex p(Complex z) const;
    Complex q(Complex z, Complex lambda) const;
};

ComplexODE transformed_equation(const SLProblem& p);

enum class SingularKind { Regular, Irregular };
enum class SingularSource { ZeroOfF, PoleOfG, PoleOfH, Infinity };

std::string to_string(SingularKind k);
std::string to_string(SingularSource s);

struct SingularPoint {
    Complex location{};
    bool at_infinity = false;
    SingularKind kind = SingularKind::Regular;
    SingularSource source = SingularSource::ZeroOfF;
    int order_p = 0;  // pole order of p
    int order_q = 0;  // generic pole order of q

    static SingularPoint infinity() {
        SingularPoint s;
        s.at_infinity = true;
        s.source = SingularSource::Infinity;
        return s;
    }
    std::string label() const;
};

/// Finite singularities in order of increasing real part (then imaginary part), then infinity if singular.
std::vector<SingularPoint> singularities(const SLProblem& p);

/// Pole orders of p and q at infinity under w = 1/z; an ordinary point reports order 0 for both.
SingularPoint classify_infinity(const SLProblem& p);

/// The point z_minus or z_plus as a SingularPoint.
SingularPoint endpoint_point(const SLProblem& p, bool plus);

/// Indicial polynomial s^2 + b s + c at a regular point, returned as (b, c).
std::array<Complex, 2> indicial_coefficients(const SLProblem& p, const SingularPoint& point, Complex lambda);

/// Local exponents (rho+, rho-), rho+ the root with larger real part.
std::array<Complex, 2> indicial_roots(const SLProblem& p, const SingularPoint& point, Complex lambda);

struct PSymbol {
    std::array<SingularPoint, 3> points;            // z-, z+, third
    std::array<std::array<Complex, 2>, 3> exponents;  // (rho+, rho-) at each point
    std::array<bool, 3> equal_exponents{};
    std::array<bool, 3> integer_difference{};

    Complex fuchs_sum() const;
    Complex difference(int j) const { return exponents[j][0] - exponents[j][1]; }
};

/// Requires exactly three singular points on the Riemann sphere.
PSymbol p_symbol(const SLProblem& p, Complex lambda);

/// zeta = (a z + b)/(c z + d).
struct MobiusMap {
    double a = 1, b = 0, c = 0, d = 1;

    Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
    double determinant() const { return a * d - b * c; }
    bool is_identity() const { return a == d && b == 0 && c == 0; }
};

/// Sends (z-, z+, third) to (0, 1, infinity). Exponent pairs are carried over unchanged.
std::pair<MobiusMap, PSymbol> normalize_to_01inf(const PSymbol& ps);

/// zeta and 1 - zeta at a point of the real orbit, both without cancellation.
std::pair<double, double> mobius_on_orbit(const MobiusMap& m, const SLProblem& p, const OrbitPoint& pt);

}  // namespace slgal
