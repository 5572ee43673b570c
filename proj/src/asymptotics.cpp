#include "slgal/asymptotics.hpp"

#include <cmath>

#include "slgal/kimura.hpp"

namespace slgal {

std::string_view to_string(Theorem2Case c) {
    switch (c) {
    case Theorem2Case::I: return "I";
    case Theorem2Case::II: return "II";
    case Theorem2Case::III: return "III";
    case Theorem2Case::IV: return "IV";
    case Theorem2Case::V: return "V";
    case Theorem2Case::None: return "None";
    }
    return "None";
}

std::string_view to_string(SpectrumTag t) {
    switch (t) {
    case SpectrumTag::DiscreteCandidate: return "DiscreteCandidate";
    case SpectrumTag::ContinuousSpectrum: return "ContinuousSpectrum";
    case SpectrumTag::NotEigenvalue: return "NotEigenvalue";
    }
    return "NotEigenvalue";
}

AsymptoticData endpoint_data(const SLProblem& p) {
    const double zm = p.z_minus(), zp = p.z_plus();
    return {p.g()(zm), p.g()(zp), p.h()(zm), p.h()(zp), 1.0 / p.df()(zm), 1.0 / p.df()(zp)};
}

namespace {

double mu_of(const AsymptoticData& d, Side s) { return s == Side::Minus ? d.mu_minus : d.mu_plus; }
double nu_of(const AsymptoticData& d, Side s) { return s == Side::Minus ? d.nu_minus : d.nu_plus; }

enum class Split { Split, AllNeg, AllPos };

}  // namespace

Matrix2C asymptotic_matrix(const AsymptoticData& d, Complex lambda, Side side) {
    return {0.0, 1.0, lambda - nu_of(d, side), -mu_of(d, side)};
}

std::array<Complex, 2> edge_rates(const AsymptoticData& d, Complex lambda, Side side) {
    return order_descending(quadratic_roots(mu_of(d, side), -(lambda - nu_of(d, side))));
}

bool decay_condition(const AsymptoticData& d, Complex lambda, Side side) {
    const double mu = mu_of(d, side);
    return std::sqrt(Complex(mu * mu) + 4.0 * (lambda - nu_of(d, side))).real() > std::abs(mu);
}

bool printed_condition(const AsymptoticData& d, Complex lambda, Side side) {
    const double mu = mu_of(d, side);
    return 16.0 * mu * mu * (lambda.real() - nu_of(d, side)) + lambda.imag() * lambda.imag() > 0.0;
}

Theorem2Case theorem2_case(const AsymptoticData& d) {
    const double mp = d.mu_plus, mm = d.mu_minus;
    if (mp == 0.0 && mm == 0.0) return Theorem2Case::I;
    if (mp == 0.0 && mm > 0.0) return Theorem2Case::II;
    if (mp < 0.0 && mm == 0.0) return Theorem2Case::III;
    if (mp > 0.0 && mm >= 0.0 && d.nu_minus >= d.nu_plus) return Theorem2Case::IV;
    if (mp <= 0.0 && mm < 0.0 && d.nu_plus >= d.nu_minus) return Theorem2Case::V;
    return Theorem2Case::None;
}

SpectrumClass classify_lambda(const AsymptoticData& d, Complex lambda, double boundary_tol) {
    SpectrumClass out;
    out.minus = {edge_rates(d, lambda, Side::Minus), decay_condition(d, lambda, Side::Minus)};
    out.plus = {edge_rates(d, lambda, Side::Plus), decay_condition(d, lambda, Side::Plus)};

    auto split = [](const SideReport& r) {
        if (r.kappa[0].real() > 0 && r.kappa[1].real() < 0) return Split::Split;
        return r.kappa[0].real() > 0 ? Split::AllPos : Split::AllNeg;
    };
    for (const auto* r : {&out.minus, &out.plus}) {
        for (const Complex& k : r->kappa) {
            if (std::abs(k.real()) <= boundary_tol) out.boundary = true;
        }
    }
    if (out.boundary) {
        out.tag = SpectrumTag::ContinuousSpectrum;
        return out;
    }
    const Split sm = split(out.minus), sp = split(out.plus);
    const bool minus_has_growing = sm != Split::AllNeg;
    const bool plus_has_decaying = sp != Split::AllPos;
    if (sm == Split::Split && sp == Split::Split) {
        out.tag = SpectrumTag::DiscreteCandidate;
    } else if ((sp == Split::AllNeg && minus_has_growing) || (sm == Split::AllPos && plus_has_decaying)) {
        out.tag = SpectrumTag::ContinuousSpectrum;
    } else {
        out.tag = SpectrumTag::NotEigenvalue;
    }
    return out;
}

SpectrumClass classify_spectrum(const SLProblem& p, Complex lambda, double kimura_tol) {
    SpectrumClass c = classify_lambda(endpoint_data(p), lambda);
    if (c.tag != SpectrumTag::DiscreteCandidate) return c;
    if (lambda.imag() == 0.0 && lambda.real() > sup_nu(p)) {
        c.tag = SpectrumTag::NotEigenvalue;
        return c;
    }
    if (!is_triangularizable(p, lambda, kimura_tol).triangularizable) c.tag = SpectrumTag::NotEigenvalue;
    return c;
}

}  // namespace slgal
