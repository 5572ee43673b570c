#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <vector>

#include "slgal/errors.hpp"
#include "slgal/linalg.hpp"

namespace slgal {

/// Dense polynomial with coefficients in ascending degree.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial monomial(int k, T scale = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = scale;
        return Polynomial(std::move(c));
    }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    template <class U>
    auto operator()(U z) const {
        using R = decltype(T{} * z);
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + R(*it);
        return acc;
    }

    /// Bound on the rounding error of Horner evaluation at z.
    template <class U>
    double rounding_bound(U z) const {
        const double r = std::abs(z);
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
        return 4.0 * static_cast<double>(c_.size() + 1) * std::numeric_limits<double>::epsilon() * acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(static_cast<double>(i)) * c_[i];
        return Polynomial(std::move(d));
    }

    /// Coefficients of p(z0 + t) in powers of t.
    std::vector<Complex> taylor_shift(Complex z0) const {
        std::vector<Complex> a(c_.begin(), c_.end());
        const std::size_t n = a.size();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            for (std::size_t j = n - 1; j > k; --j) a[j - 1] += z0 * a[j];
        }
        return a;
    }

    /// Coefficients reversed: t^d p(1/t) for the given nominal degree d >= degree().
    Polynomial reversed(int d) const {
        std::vector<T> r(static_cast<std::size_t>(d) + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
        return Polynomial(std::move(r));
    }

    /// Multiplies by t^k.
    Polynomial shifted(int k) const {
        if (is_zero()) return {};
        std::vector<T> r(static_cast<std::size_t>(k), T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + T(-1) * b; }
    friend Polynomial operator*(T s, const Polynomial& p) {
        std::vector<T> r(p.c_);
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    template <class U>
    Polynomial<U> cast() const {
        return Polynomial<U>(std::vector<U>(c_.begin(), c_.end()));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using RealPoly = Polynomial<double>;
using ComplexPoly = Polynomial<Complex>;

/// All complex roots (with multiplicity) via eigenvalues of the companion matrix.
std::vector<Complex> roots(const ComplexPoly& p);
inline std::vector<Complex> roots(const RealPoly& p) { return roots(p.cast<Complex>()); }

/// Real rational function num/den with real coefficients.
struct RationalFn {
    RealPoly num;
    RealPoly den{1.0};

    RationalFn() = default;
    RationalFn(RealPoly n, RealPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error(ErrorKind::InvalidParameter, "rational function with zero denominator");
    }
    static RationalFn polynomial(RealPoly p) { return RationalFn(std::move(p), RealPoly{1.0}); }
    static RationalFn constant(double c) { return polynomial(RealPoly{c}); }

    /// Throws Pole at a root of the denominator; callers never receive 0/0.
    template <class U>
    auto operator()(U z) const {
        const auto d = den(z);
        if (std::abs(d) <= den.rounding_bound(z)) {
            const auto n = num(z);
            if (std::abs(n) <= num.rounding_bound(z)) {
                throw Error(ErrorKind::Pole, "evaluation at a common root of numerator and denominator");
            }
            throw Error(ErrorKind::Pole, "evaluation at a pole of a rational function");
        }
        return num(z) / d;
    }

    RationalFn derivative() const {
        return RationalFn(num.derivative() * den - num * den.derivative(), den * den);
    }
};

}  // namespace slgal
