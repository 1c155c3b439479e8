#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "ckdv/errors.hpp"
#include "ckdv/matrix2.hpp"

namespace ckdv {

/// Coupled system in the general matrix form
///   w_t + A1 w_xxx + A2 w_x = A3 (u u_x, v v_x)^T + A4 (u_x v, u v_x)^T.
struct GeneralSystem {
    Mat2 A1, A2, A3, A4;
};

/// Coupled system with diagonal dispersion:
///   u_t + a1 u_xxx + b11 u_x = -b12 v_x + c11 uu_x + c12 vv_x + d11 u_x v + d12 u v_x
///   v_t + a2 v_xxx + b22 v_x = -b21 u_x + c21 uu_x + c22 vv_x + d21 u_x v + d22 u v_x
struct DiagonalSystem {
    double a1 = 1, a2 = 1;
    double b11 = 0, b12 = 0, b21 = 0, b22 = 0;
    double c11 = 0, c12 = 0, c21 = 0, c22 = 0;
    double d11 = 0, d12 = 0, d21 = 0, d22 = 0;

    /// Mixed nonlinearities combine into (uv)_x in both equations.
    bool divergence_form() const { return d11 == d12 && d21 == d22; }
};

struct DispersionRatio {
    double r;
};

inline DispersionRatio dispersion_ratio(const DiagonalSystem& sys) {
    return {sys.a2 / sys.a1};
}

/// Invertible change of unknowns w = M z used to diagonalize A1.
struct ChangeOfBasis {
    Mat2 M = Mat2::identity();
    Mat2 M_inv = Mat2::identity();

    /// max |M*M_inv - I| relative to max |M|.
    double residual() const {
        Mat2 e = (M * M_inv) - Mat2::identity();
        double scale = std::max(M.max_abs(), 1.0);
        return e.max_abs() / scale;
    }
};

namespace detail {

/// Expansion of one quadratic monomial in the old unknowns (u,v) = M(p,q)
/// over the basis (p p_x, q q_x, p_x q, p q_x). Index: 0 uu_x, 1 vv_x,
/// 2 u_x v, 3 u v_x.
inline std::array<double, 4> quadratic_basis(const Mat2& M, int which) {
    const double m11 = M.a, m12 = M.b, m21 = M.c, m22 = M.d;
    switch (which) {
        case 0: return {m11 * m11, m12 * m12, m11 * m12, m11 * m12};
        case 1: return {m21 * m21, m22 * m22, m21 * m22, m21 * m22};
        case 2: return {m11 * m21, m12 * m22, m11 * m22, m12 * m21};
        default: return {m11 * m21, m12 * m22, m12 * m21, m11 * m22};
    }
}

} // namespace detail

/// Diagonalizes A1 over the reals and rewrites the system in the (a,b,c,d)
/// coefficient form for the new unknowns z = M^{-1} w.
///
/// Eigenvalue order: when A1 is already diagonal the given order is kept
/// (M = I); otherwise a1 is the larger eigenvalue by absolute value, ties
/// broken positive-first. Classification downstream is invariant under the
/// alternative order, so the convention only pins reproducibility.
inline std::pair<DiagonalSystem, ChangeOfBasis> diagonalize(const GeneralSystem& sys,
                                                            double tol = 1e-10) {
    if (!(tol > 0)) throw InvalidParameter("diagonalize: tol must be > 0");
    const double scale = std::max(sys.A1.max_abs(), 1.0);

    double l1, l2;
    ChangeOfBasis basis;
    if (sys.A1.is_diagonal()) {
        l1 = sys.A1.a;
        l2 = sys.A1.d;
    } else {
        auto [e1, e2] = eigenvalues_2x2(sys.A1, tol * scale * scale);
        if (std::abs(e1) < std::abs(e2) ||
            (std::abs(e1) == std::abs(e2) && e1 < e2)) std::swap(e1, e2);
        l1 = e1;
        l2 = e2;
        if (std::abs(l1 - l2) <= tol * scale) {
            // Repeated eigenvalue: diagonalizable only if A1 = lambda*I,
            // which is excluded here since A1 is not diagonal.
            throw NonDiagonalizable("repeated eigenvalue with defective eigenspace");
        }
        auto v1 = eigenvector_2x2(sys.A1, l1, tol * scale);
        auto v2 = eigenvector_2x2(sys.A1, l2, tol * scale);
        basis.M = {v1[0], v2[0], v1[1], v2[1]};
        basis.M_inv = basis.M.inverse();
    }
    if (std::abs(l1) <= tol * scale || std::abs(l2) <= tol * scale)
        throw ZeroEigenvalue("dispersion matrix has a (near-)zero eigenvalue");

    DiagonalSystem out;
    out.a1 = l1;
    out.a2 = l2;

    Mat2 B = basis.M_inv * sys.A2 * basis.M;
    out.b11 = B.a;
    out.b12 = B.b;
    out.b21 = B.c;
    out.b22 = B.d;

    // Quadratic terms: each old monomial expands over the new-basis
    // monomials; collect rows of M^{-1} (A3 | A4) against that expansion.
    const double a3[2][2] = {{sys.A3.a, sys.A3.b}, {sys.A3.c, sys.A3.d}};
    const double a4[2][2] = {{sys.A4.a, sys.A4.b}, {sys.A4.c, sys.A4.d}};
    const double minv[2][2] = {{basis.M_inv.a, basis.M_inv.b}, {basis.M_inv.c, basis.M_inv.d}};
    double q[2][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}};
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            const double w3 = minv[i][k];
            for (int mono = 0; mono < 2; ++mono) {
                auto e3 = detail::quadratic_basis(basis.M, mono);
                auto e4 = detail::quadratic_basis(basis.M, 2 + mono);
                for (int j = 0; j < 4; ++j) {
                    q[i][j] += w3 * (a3[k][mono] * e3[j] + a4[k][mono] * e4[j]);
                }
            }
        }
    }
    out.c11 = q[0][0];
    out.c12 = q[0][1];
    out.d11 = q[0][2];
    out.d12 = q[0][3];
    out.c21 = q[1][0];
    out.c22 = q[1][1];
    out.d21 = q[1][2];
    out.d22 = q[1][3];
    return {out, basis};
}

enum class SystemKind { MajdaBiello, HirotaSatsuma, GearGrimshaw, BonaChenSaut };

inline std::string to_string(SystemKind k) {
    switch (k) {
        case SystemKind::MajdaBiello: return "majda_biello";
        case SystemKind::HirotaSatsuma: return "hirota_satsuma";
        case SystemKind::GearGrimshaw: return "gear_grimshaw";
        default: return "bona_chen_saut";
    }
}

/// Physical parameters for the named systems. Only the fields relevant to
/// the chosen kind are read.
struct NamedParams {
    double a1 = 1;                              // Hirota-Satsuma dispersion
    double a2 = 1;                              // Majda-Biello dispersion
    double c12 = 1;                             // Hirota-Satsuma coupling
    double rho1 = 1, rho2 = 1;                  // Gear-Grimshaw densities
    double sigma1 = 0, sigma2 = 0, sigma3 = 0, sigma4 = 0;
};

/// Builds the general-form coefficient matrices of the named systems.
inline GeneralSystem named_system(SystemKind kind, const NamedParams& p = {}) {
    GeneralSystem g;
    switch (kind) {
        case SystemKind::MajdaBiello:
            // u_t + u_xxx = -v v_x ; v_t + a2 v_xxx = -(uv)_x
            if (p.a2 == 0) throw InvalidParameter("Majda-Biello requires a2 != 0");
            g.A1 = Mat2::diag(1.0, p.a2);
            g.A3 = {0, -1, 0, 0};
            g.A4 = {0, 0, -1, -1};
            return g;
        case SystemKind::HirotaSatsuma:
            // u_t + a1 u_xxx = -6 a1 u u_x + c12 v v_x ; v_t + v_xxx = -3 u v_x
            if (p.a1 == 0) throw InvalidParameter("Hirota-Satsuma requires a1 != 0");
            g.A1 = Mat2::diag(p.a1, 1.0);
            g.A3 = {-6.0 * p.a1, p.c12, 0, 0};
            g.A4 = {0, 0, 0, -3};
            return g;
        case SystemKind::GearGrimshaw: {
            if (!(p.rho1 > 0) || !(p.rho2 > 0))
                throw InvalidParameter("Gear-Grimshaw requires rho1, rho2 > 0");
            const double r1 = p.rho1, r2 = p.rho2;
            g.A1 = {1, p.sigma3, r2 * p.sigma3 / r1, 1 / r1};
            g.A2 = {0, 0, 0, p.sigma4 / r1};
            g.A3 = {-1, p.sigma1, r2 * p.sigma2 / r1, -1 / r1};
            g.A4 = {p.sigma2, p.sigma2, r2 * p.sigma1 / r1, r2 * p.sigma1 / r1};
            return g;
        }
        case SystemKind::BonaChenSaut:
            // u_t + v_x + (uv)_x + (1/6) v_xxx = 0 ; v_t + u_x + v v_x + (1/6) u_xxx = 0
            g.A1 = {0, 1.0 / 6.0, 1.0 / 6.0, 0};
            g.A2 = {0, 1, 1, 0};
            g.A3 = {0, 0, 0, -1};
            g.A4 = {-1, -1, 0, 0};
            return g;
    }
    throw UnknownCase("named_system: bad kind");
}

/// Eigenvalues of the Gear-Grimshaw dispersion matrix, larger one first.
/// Always real: the radicand is a sum of squares for rho1 > 0.
inline std::pair<double, double> gg_eigenvalues(double rho1, double rho2, double sigma3) {
    if (!(rho1 > 0) || !(rho2 > 0)) throw InvalidParameter("gg_eigenvalues: rho1, rho2 > 0");
    const double mid = (rho1 + 1.0) / (2.0 * rho1);
    const double rad = (rho1 - 1.0) * (rho1 - 1.0) + 4.0 * rho1 * rho2 * sigma3 * sigma3;
    const double half = std::sqrt(rad) / (2.0 * rho1);
    return {mid + half, mid - half};
}

/// True iff the Gear-Grimshaw eigenvalue ratio lambda2/lambda1 equals 1/4,
/// expressed through the parameter condition
///   rho2 sigma3^2 <= 9/25  and  rho1^2 + (25 rho2 sigma3^2 - 17)/4 rho1 + 1 = 0.
inline bool gg_quarter_condition(double rho1, double rho2, double sigma3, double tol = 0.0) {
    if (!(rho1 > 0) || !(rho2 > 0)) throw InvalidParameter("gg_quarter_condition: rho1, rho2 > 0");
    const double q = rho2 * sigma3 * sigma3;
    if (q > 9.0 / 25.0 + tol) return false;
    const double quad = rho1 * rho1 + (25.0 * q - 17.0) / 4.0 * rho1 + 1.0;
    return std::abs(quad) <= tol;
}

} // namespace ckdv
