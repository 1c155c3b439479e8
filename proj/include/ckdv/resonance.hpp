#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "ckdv/errors.hpp"

namespace ckdv {

/// Paper bracket: <x> = 1 + |x|. Shared by every module.
inline double bracket(double x) { return 1.0 + std::abs(x); }

/// Dispersion polynomial phi(xi) = alpha xi^3 - beta xi.
struct PhaseFunction {
    double alpha = 1;
    double beta = 0;
};

inline double phase_eval(const PhaseFunction& p, double xi) {
    return p.alpha * xi * xi * xi - p.beta * xi;
}

/// Three dispersion pairs attached to the convolution positions 1,2,3.
struct ResonanceTriple {
    std::array<PhaseFunction, 3> phases;
};

/// H0: all three positions share one pair (the classical arrangement).
inline ResonanceTriple triple_h0(PhaseFunction p1) { return {{p1, p1, p1}}; }
/// H1: positions 1 and 2 share the first pair (divergence type D1).
inline ResonanceTriple triple_h1(PhaseFunction p1, PhaseFunction p2) { return {{p1, p1, p2}}; }
/// H2: positions 1 and 3 share the first pair (types D2, ND1, ND2).
inline ResonanceTriple triple_h2(PhaseFunction p1, PhaseFunction p2) { return {{p1, p2, p1}}; }

/// Resonance function H = sum of phases over a zero-sum frequency triple;
/// xi3 is implied by xi1 + xi2 + xi3 = 0.
inline double resonance_value(const ResonanceTriple& t, double xi1, double xi2) {
    const double xi3 = -(xi1 + xi2);
    return phase_eval(t.phases[0], xi1) + phase_eval(t.phases[1], xi2) +
           phase_eval(t.phases[2], xi3);
}

/// Modulation distances L_i = tau_i - phi_i(xi_i) of a convolution point.
struct ModulationWeights {
    double L1, L2, L3;
};

inline ModulationWeights modulation_weights(const ResonanceTriple& t, double xi1, double xi2,
                                            double tau1, double tau2) {
    const double xi3 = -(xi1 + xi2);
    const double tau3 = -(tau1 + tau2);
    return {tau1 - phase_eval(t.phases[0], xi1), tau2 - phase_eval(t.phases[1], xi2),
            tau3 - phase_eval(t.phases[2], xi3)};
}

enum class RootKind { NoRealRoots, DoubleRoot, TwoDistinctRoots };

struct RootClassification {
    RootKind kind = RootKind::NoRealRoots;
    std::vector<double> roots; // 0, 1 or 2 entries, ascending
};

/// Quadratic evaluator together with its root structure.
struct QuadraticInfo {
    std::function<double(double)> eval;
    RootClassification roots;
};

/// Characteristic quadratic h_r(x) = x^2 + x + (1-r)/3. Its real roots are
/// the slopes of the resonance set's hyperplanes; they appear exactly when
/// r >= 1/4.
inline QuadraticInfo char_quadratic(double r) {
    QuadraticInfo q;
    q.eval = [r](double x) { return x * x + x + (1.0 - r) / 3.0; };
    const double disc = (4.0 * r - 1.0) / 3.0;
    if (disc < 0) {
        q.roots.kind = RootKind::NoRealRoots;
    } else if (disc == 0) {
        q.roots.kind = RootKind::DoubleRoot;
        q.roots.roots = {-0.5};
    } else {
        q.roots.kind = RootKind::TwoDistinctRoots;
        const double s = std::sqrt(disc);
        q.roots.roots = {(-1.0 - s) / 2.0, (-1.0 + s) / 2.0};
    }
    return q;
}

/// Derivative quadratic p_r(x) = x^2 + 2x + 1 - r, roots -1 +- sqrt(r).
inline QuadraticInfo deriv_quadratic(double r) {
    QuadraticInfo q;
    q.eval = [r](double x) { return x * x + 2.0 * x + 1.0 - r; };
    if (r < 0) {
        q.roots.kind = RootKind::NoRealRoots;
    } else if (r == 0) {
        q.roots.kind = RootKind::DoubleRoot;
        q.roots.roots = {-1.0};
    } else {
        q.roots.kind = RootKind::TwoDistinctRoots;
        const double s = std::sqrt(r);
        q.roots.roots = {-1.0 - s, -1.0 + s};
    }
    return q;
}

/// Cubic evaluator pair (value, derivative).
struct CubicInfo {
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
};

/// Reduced cubic P_{xi,tau}(x). Satisfies L1 + L2 = P_{xi3,tau3}(xi2) and
/// L2 + L3 = P_{xi1,tau1}(xi2) on the convolution set for the H2 pair
/// arrangement ((a1,b1),(a2,b2),(a1,b1)).
inline CubicInfo reduced_P(double xi, double tau, double alpha1, double alpha2, double beta1,
                           double beta2) {
    if (alpha1 == 0 || alpha2 == 0) throw InvalidParameter("reduced_P: alpha1, alpha2 != 0");
    const double c3 = alpha1 - alpha2;
    const double c2 = 3.0 * alpha1 * xi;
    const double c1 = 3.0 * alpha1 * xi * xi + beta2 - beta1;
    const double c0 = alpha1 * xi * xi * xi - beta1 * xi - tau;
    CubicInfo out;
    out.eval = [=](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    out.deriv = [=](double x) { return (3.0 * c3 * x + 2.0 * c2) * x + c1; };
    return out;
}

/// Reduced quadratic Q_{xi,tau}(x) = 3 a1 xi x^2 + 3 a1 xi^2 x + phi(xi) - tau,
/// the alpha1 = alpha2 degeneration of P. Satisfies L1 + L3 = Q_{xi2,tau2}(xi1).
inline CubicInfo reduced_Q(double xi, double tau, double alpha1, double beta1) {
    if (alpha1 == 0) throw InvalidParameter("reduced_Q: alpha1 != 0");
    const double c2 = 3.0 * alpha1 * xi;
    const double c1 = 3.0 * alpha1 * xi * xi;
    const double c0 = alpha1 * xi * xi * xi - beta1 * xi - tau;
    CubicInfo out;
    out.eval = [=](double x) { return (c2 * x + c1) * x + c0; };
    out.deriv = [=](double x) { return 3.0 * alpha1 * xi * (2.0 * x + xi); };
    return out;
}

/// Coercivity constant of h_r for r < 1/4:
///   delta1 = inf_x h_r(x) / (1 + x^2)  > 0.
/// Derivative-free golden-section minimization; the ratio tends to 1 at
/// +-infinity and its interior minimum sits in (-1, 0), so bracketing on
/// [-10, 10] is safe for every r < 1/4.
inline double coercivity(double r) {
    if (r >= 0.25) throw OutOfDomain("coercivity: requires r < 1/4");
    auto ratio = [r](double x) { return (x * x + x + (1.0 - r) / 3.0) / (1.0 + x * x); };
    double lo = -10.0, hi = 10.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = ratio(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = ratio(x2);
        }
    }
    return ratio(0.5 * (lo + hi));
}

} // namespace ckdv
