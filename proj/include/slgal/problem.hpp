#pragma once

#include <optional>
#include <string>
#include <variant>

#include "slgal/polynomial.hpp"

namespace slgal {

struct HulthenParams {
    double alpha1, alpha2, alpha3;
};
struct AllenCahnParams {
    double alpha;
};
struct CustomFamily {};

using FamilyTag = std::variant<CustomFamily, HulthenParams, AllenCahnParams>;

/// Limits of the coefficients at the two equilibria, a± = 1/f'(z±).
struct AsymptoticData {
    double mu_minus, mu_plus;
    double nu_minus, nu_plus;
    double a_minus, a_plus;
};

/// A point of the heteroclinic orbit together with its distances to both
/// equilibria, each computed without cancellation.
struct OrbitPoint {
    double z;
    double from_minus;  // z - z_minus
    double to_plus;     // z_plus - z
};

/// psi'' + mu(x) psi' + nu(x) psi = lambda psi with mu = g(gamma), nu = h(gamma),
/// gamma a heteroclinic orbit of dz/dx = f(z) from the source z_minus to the sink z_plus.
///
/// Immutable after construction; every constructor validates the full set of
/// invariants and throws Error(InvariantViolation) naming the first failure.
class SLProblem {
public:
    static SLProblem custom(RealPoly f, RationalFn g, RationalFn h, double z_minus, double z_plus,
                            double gamma_init);

    const RealPoly& f() const { return f_; }
    const RealPoly& df() const { return df_; }
    const RationalFn& g() const { return g_; }
    const RationalFn& h() const { return h_; }
    double z_minus() const { return z_minus_; }
    double z_plus() const { return z_plus_; }
    double gamma_init() const { return gamma_init_; }
    const FamilyTag& family() const { return family_; }

    bool is_hulthen() const { return std::holds_alternative<HulthenParams>(family_); }
    bool is_allen_cahn() const { return std::holds_alternative<AllenCahnParams>(family_); }

    /// f(z_minus + t) and f(z_plus + t) in powers of t, constant term exactly zero.
    const RealPoly& f_near_minus() const { return f_near_minus_; }
    const RealPoly& f_near_plus() const { return f_near_plus_; }

    std::string family_name() const;

private:
    SLProblem(RealPoly f, RationalFn g, RationalFn h, double z_minus, double z_plus, double gamma_init,
              FamilyTag tag);
    void validate() const;

    friend SLProblem make_hulthen(double, double, double);
    friend SLProblem make_allen_cahn(double);

    RealPoly f_, df_;
    RationalFn g_, h_;
    double z_minus_, z_plus_, gamma_init_;
    FamilyTag family_;
    RealPoly f_near_minus_, f_near_plus_;
};

/// nu(x) = alpha2/(e^x + alpha1) - alpha3/(e^x + alpha1)^2, mu = 0, f = z(1-z).
SLProblem make_hulthen(double alpha1, double alpha2, double alpha3);

/// Linearization about the Allen-Cahn front, f = z(1-z)/sqrt(2), 0 < alpha < 1.
SLProblem make_allen_cahn(double alpha);

OrbitPoint orbit_point(const SLProblem& p, double x);

/// gamma(x); built-ins use their closed form, custom problems are pinned by gamma(0) = gamma_init.
inline double heteroclinic_value(const SLProblem& p, double x) { return orbit_point(p, x).z; }

struct CoefficientValues {
    double mu, nu;
};
CoefficientValues coefficient_values(const SLProblem& p, double x);

/// sup of nu over the real line (equivalently max of h over the segment [z-, z+]).
double sup_nu(const SLProblem& p);

}  // namespace slgal
