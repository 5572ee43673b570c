#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace slgal {

using Complex = std::complex<double>;

/// Column vector in C^2.
struct Vector2C {
    Complex x{}, y{};

    friend Vector2C operator+(const Vector2C& a, const Vector2C& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vector2C operator-(const Vector2C& a, const Vector2C& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vector2C operator*(Complex s, const Vector2C& v) { return {s * v.x, s * v.y}; }
    friend Vector2C operator*(double s, const Vector2C& v) { return {s * v.x, s * v.y}; }
};

inline double norm_of(const Vector2C& v) { return std::hypot(std::abs(v.x), std::abs(v.y)); }

/// det[u v] for column vectors u, v.
inline Complex cross(const Vector2C& u, const Vector2C& v) { return u.x * v.y - u.y * v.x; }

/// Hermitian inner product conj(u)·v.
inline Complex dot(const Vector2C& u, const Vector2C& v) {
    return std::conj(u.x) * v.x + std::conj(u.y) * v.y;
}

/// Principal angle between the complex lines spanned by u and v, in [0, pi/2].
inline double principal_angle(const Vector2C& u, const Vector2C& v) {
    return std::atan2(std::abs(cross(u, v)), std::abs(dot(u, v)));
}

/// 2x2 complex matrix, row-major.
struct Matrix2C {
    Complex a11{}, a12{}, a21{}, a22{};

    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex trace() const { return a11 + a22; }
    Complex det() const { return a11 * a22 - a12 * a21; }
    Vector2C column(int j) const { return j == 0 ? Vector2C{a11, a21} : Vector2C{a12, a22}; }

    Matrix2C inverse() const {
        const Complex d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    friend Matrix2C operator+(const Matrix2C& a, const Matrix2C& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Matrix2C operator-(const Matrix2C& a, const Matrix2C& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Matrix2C operator*(Complex s, const Matrix2C& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Matrix2C operator*(double s, const Matrix2C& m) { return Complex(s) * m; }
    friend Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Vector2C operator*(const Matrix2C& m, const Vector2C& v) {
        return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
    }
};

/// Frobenius norm.
inline double norm_of(const Matrix2C& m) {
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22));
}

/// Both roots of s^2 + b s + c = 0, computed without cancellation.
inline std::array<Complex, 2> quadratic_roots(Complex b, Complex c) {
    const Complex disc = std::sqrt(b * b - 4.0 * c);
    // pick the sign that avoids cancellation in -b -/+ disc
    const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
    return {q, c / q};
}

/// Orders a pair by descending real part, ties by descending imaginary part.
/// Real parts within a few ulps of each other count as a tie.
inline std::array<Complex, 2> order_descending(std::array<Complex, 2> r) {
    const double scale = std::max({1.0, std::abs(r[0]), std::abs(r[1])});
    const double dre = r[1].real() - r[0].real();
    const bool tie = std::abs(dre) <= 1e-14 * scale;
    const bool swap = tie ? (r[1].imag() > r[0].imag()) : (dre > 0.0);
    if (swap) std::swap(r[0], r[1]);
    return r;
}

}  // namespace slgal
