#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "ckdv/errors.hpp"

namespace ckdv {

/// 2x2 real matrix, row-major. Everything the library needs from linear
/// algebra fits in this struct, so no external dependency is pulled in.
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0; // [a b; c d]

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(double x, double y) { return {x, 0, 0, y}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(double s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }

    std::array<double, 2> mul(const std::array<double, 2>& v) const {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }

    Mat2 inverse() const {
        double dt = det();
        if (dt == 0.0) throw Error("singular 2x2 matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    bool is_diagonal() const { return b == 0.0 && c == 0.0; }
};

/// Real eigenvalues of a 2x2 matrix via the sign-aware quadratic formula.
/// Throws ComplexEigenvalues when the discriminant is below -tol.
/// Returned pair is unordered; callers impose their own convention.
inline std::pair<double, double> eigenvalues_2x2(const Mat2& m, double tol) {
    double tr = m.trace();
    double dt = m.det();
    double disc = tr * tr - 4.0 * dt;
    if (disc < -tol) throw ComplexEigenvalues("complex eigenvalue pair, discriminant < 0");
    if (disc < 0.0) disc = 0.0;
    double sq = std::sqrt(disc);
    // Avoid cancellation: compute the larger-magnitude root first.
    double l1 = (tr >= 0.0) ? (tr + sq) / 2.0 : (tr - sq) / 2.0;
    double l2 = (l1 != 0.0) ? dt / l1 : (tr - l1);
    return {l1, l2};
}

/// Eigenvector of m for eigenvalue lambda, normalized to unit length with
/// the largest-magnitude component positive. Throws NonDiagonalizable when
/// (m - lambda I) does not determine a direction (defective repeated root).
inline std::array<double, 2> eigenvector_2x2(const Mat2& m, double lambda, double tol) {
    // Rows of (m - lambda I) are orthogonal to the eigenvector.
    double r1x = m.a - lambda, r1y = m.b;
    double r2x = m.c, r2y = m.d - lambda;
    double n1 = std::hypot(r1x, r1y), n2 = std::hypot(r2x, r2y);
    std::array<double, 2> v{};
    if (n1 >= n2 && n1 > tol) {
        v = {-r1y / n1, r1x / n1};
    } else if (n2 > tol) {
        v = {-r2y / n2, r2x / n2};
    } else {
        // m is lambda*I: any direction works; pick e1.
        v = {1.0, 0.0};
    }
    double lead = (std::abs(v[0]) >= std::abs(v[1])) ? v[0] : v[1];
    if (lead < 0.0) { v[0] = -v[0]; v[1] = -v[1]; }
    return v;
}

} // namespace ckdv
