#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ckdv/errors.hpp"
#include "ckdv/quadrature.hpp"
#include "ckdv/rational.hpp"
#include "ckdv/resonance.hpp"

namespace ckdv {

/// Axis-aligned-in-tau region around a curve: points (xi, tau) with
/// xi in [xi_lo, xi_hi] and |tau - center(xi)| <= half_width.
struct BoxSet {
    double xi_lo, xi_hi;
    std::function<double(double)> center;
    double half_width;

    double area() const { return 2.0 * half_width * (xi_hi - xi_lo); }
    bool contains(double xi, double tau) const {
        return xi >= xi_lo && xi <= xi_hi && std::abs(tau - center(xi)) <= half_width;
    }
};

enum class FamilyTag {
    ClaimA,       // divergence, r < 0: forces b <= (4+2s)/3
    ClaimB,       // divergence, r < 0: forces b >= 1/4 - s/3
    Case3ThmA,    // divergence, r < 0, -1 < s < -3/4: forces b <= 1 + s/3
    D1_neg,       // type D1 with r < 0: forces s >= -3/4
    D2_pos_small, // type D2 with 0 < r < 1/4: forces b <= 3/4 + s/3
    ND1_neg,      // type ND1 with r < 0: forces s >= -3/4
    ND1_quarter,  // type ND1 with r = 1/4: forces s >= 3/4
    ND1_equal,    // type ND1 with r = 1: forces s >= 0
};

inline std::string to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::ClaimA: return "claim-a";
        case FamilyTag::ClaimB: return "claim-b";
        case FamilyTag::Case3ThmA: return "thm17-case3";
        case FamilyTag::D1_neg: return "d1-neg";
        case FamilyTag::D2_pos_small: return "d2-pos-small";
        case FamilyTag::ND1_neg: return "nd1-neg";
        case FamilyTag::ND1_quarter: return "nd1-quarter";
        case FamilyTag::ND1_equal: return "nd1-equal";
    }
    throw UnknownCase("bad family tag");
}

inline FamilyTag family_from_string(const std::string& s) {
    for (FamilyTag t : {FamilyTag::ClaimA, FamilyTag::ClaimB, FamilyTag::Case3ThmA,
                        FamilyTag::D1_neg, FamilyTag::D2_pos_small, FamilyTag::ND1_neg,
                        FamilyTag::ND1_quarter, FamilyTag::ND1_equal}) {
        if (to_string(t) == s) return t;
    }
    throw UnknownCase("unknown sharpness case: " + s);
}

/// Affine inequality  cs*s + cb*b + c0 <= 0  that must hold whenever the
/// family's bilinear estimate holds (the family ratio grows like
/// N^{cs*s + cb*b + c0}).
struct NecessaryCondition {
    Rational coef_s, coef_b, coef_const;
    FamilyTag source;

    Rational evaluate(const Rational& s, const Rational& b) const {
        return coef_s * s + coef_b * b + coef_const;
    }
    bool holds(const Rational& s, const Rational& b) const {
        return evaluate(s, b) <= Rational(0);
    }
    std::string str() const {
        return coef_s.str() + "*s + " + coef_b.str() + "*b + " + coef_const.str() + " <= 0";
    }
};

/// Expected magnitude of one quantity at box points: |value| must not exceed
/// 4x the scale, and when `check_lower` is set it must also reach scale/4.
struct ScalePrediction {
    double scale = 1;
    bool check_lower = true;
};

/// One concrete counterexample triple at parameter N: the three boxes with
/// their dispersion-pair assignments, plus everything the ratio evaluation
/// needs. Positions follow the weighted-L2 dual form: L1 and L2 carry
/// exponent b, L3 carries 1-b, whichever box plays the Minkowski-sum role.
struct BoxTriple {
    FamilyTag tag;
    double N;
    std::array<BoxSet, 3> box;            // positions 1,2,3 (0-based storage)
    std::array<PhaseFunction, 3> pair;    // L_i = tau_i - phi_{pair[i]}(xi_i)
    int numerator_index;                  // 2 for divergence types, 0 for ND
    std::array<int, 2> free_indices;      // the two boxes summed in Lemma 5.1
    int sum_index;                        // the box receiving the negated sum
    std::array<ScalePrediction, 3> l_scale;
    ScalePrediction h_scale;
};

/// Family-level metadata: builder plus the analytic ratio exponent.
struct BoxFamily {
    FamilyTag tag;
    double alpha1, r, beta;
    static constexpr double kNMin = 16.0;

    /// Ratio growth exponent as a function of (s, b): exact rational affine.
    Rational predicted_ratio_exponent(const Rational& s, const Rational& b) const {
        auto cond = necessary_condition();
        return cond.evaluate(s, b);
    }
    double predicted_ratio_exponent(double s, double b) const {
        auto c = necessary_condition();
        return c.coef_s.to_double() * s + c.coef_b.to_double() * b + c.coef_const.to_double();
    }

    NecessaryCondition necessary_condition() const {
        switch (tag) {
            case FamilyTag::ClaimA:
                return {Rational(-2), Rational(3), Rational(-4), tag};
            case FamilyTag::ClaimB:
                return {Rational(-1), Rational(-3), Rational(3, 4), tag};
            case FamilyTag::Case3ThmA:
                return {Rational(-1), Rational(3), Rational(-3), tag};
            case FamilyTag::D1_neg:
            case FamilyTag::ND1_neg:
                return {Rational(-2), Rational(0), Rational(-3, 2), tag};
            case FamilyTag::D2_pos_small:
                return {Rational(-1), Rational(3), Rational(-9, 4), tag};
            case FamilyTag::ND1_quarter:
                return {Rational(-1), Rational(0), Rational(3, 4), tag};
            case FamilyTag::ND1_equal:
                return {Rational(-2), Rational(0), Rational(0), tag};
        }
        throw UnknownCase("bad family tag");
    }

    BoxTriple build(double N) const;
};

/// Constructs a family with its standard dispersion ratio. alpha1 and beta
/// are exposed because the discrete packet tests need small alpha; the
/// sharpness theorems fix beta1 = beta2 = beta (default 0).
inline BoxFamily make_family(FamilyTag tag, double alpha1 = 1.0, double beta = 0.0,
                             double r_override = 0.0) {
    double r;
    switch (tag) {
        case FamilyTag::ClaimA:
        case FamilyTag::ClaimB:
        case FamilyTag::Case3ThmA:
        case FamilyTag::D1_neg:
        case FamilyTag::ND1_neg:
            r = -1.0;
            break;
        case FamilyTag::D2_pos_small:
            r = 1.0 / 9.0;
            break;
        case FamilyTag::ND1_quarter:
            r = 0.25;
            break;
        case FamilyTag::ND1_equal:
            r = 1.0;
            break;
        default:
            throw UnknownCase("bad family tag");
    }
    if (r_override != 0.0) r = r_override;
    if (alpha1 == 0) throw InvalidParameter("make_family: alpha1 must be nonzero");
    return {tag, alpha1, r, beta};
}

namespace detail {

/// Half-width for the sum box: maximal deviation of -(tau_i + tau_j) from
/// the target center over the free boxes' corner extremes (dense sampling
/// of the xi-rectangle plus the tau half-widths), times a 1.05 safety
/// factor. The paper leaves this constant implicit; computing it makes the
/// containment checkable at every N.
inline double computed_half_width(const BoxSet& f1, const BoxSet& f2,
                                  const std::function<double(double)>& target_center) {
    double worst = 0;
    const int n = 32;
    for (int i = 0; i <= n; ++i) {
        const double x1 = f1.xi_lo + (f1.xi_hi - f1.xi_lo) * i / n;
        for (int j = 0; j <= n; ++j) {
            const double x2 = f2.xi_lo + (f2.xi_hi - f2.xi_lo) * j / n;
            const double dev =
                std::abs(-(f1.center(x1) + f2.center(x2)) - target_center(-(x1 + x2)));
            worst = std::max(worst, dev);
        }
    }
    return 1.05 * (worst + f1.half_width + f2.half_width);
}

} // namespace detail

inline BoxTriple BoxFamily::build(double N) const {
    if (N < kNMin) throw InvalidParameter("build_family: N below N_min = 16");
    const double A = alpha1;
    const double a2 = r * alpha1;
    const double B = beta;
    const PhaseFunction p1{A, B}, p2{a2, B};
    auto phi = [](PhaseFunction p) {
        return [p](double xi) { return phase_eval(p, xi); };
    };

    BoxTriple t;
    t.tag = tag;
    t.N = N;
    t.free_indices = {0, 1};
    t.sum_index = 2;
    t.numerator_index = 2;

    const double sN = std::sqrt(N);
    const double invs = 1.0 / sN;

    switch (tag) {
        case FamilyTag::ClaimA: {
            if (!(r < 0)) throw InvalidParameter("ClaimA requires r < 0");
            t.pair = {p1, p2, p1};
            t.box[0] = {N - 1, N, phi(p1), 1.0};
            t.box[1] = {-N - 2, -N - 1, phi(p2), 1.0};
            const double tau3c = -(A - a2) * N * N * N;
            auto c3 = [tau3c](double) { return tau3c; };
            t.box[2] = {1.0, 3.0, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = std::abs(A - a2) * N * N * N;
            t.l_scale = {ScalePrediction{1.0, false}, {1.0, false}, {h, true}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::ClaimB: {
            if (!(r < 0)) throw InvalidParameter("ClaimB requires r < 0");
            t.pair = {p1, p2, p1};
            t.free_indices = {0, 2};
            t.sum_index = 1;
            t.box[0] = {N - invs, N, phi(p1), 1.0};
            t.box[2] = {N - invs, N, phi(p1), 1.0};
            PhaseFunction quarter{A / 4.0, B};
            auto c2 = phi(quarter);
            t.box[1] = {-2 * N, -2 * N + 2 * invs, c2,
                        detail::computed_half_width(t.box[0], t.box[2], c2)};
            const double h = 2.0 * std::abs(A) * std::abs(1.0 - 4.0 * r) * N * N * N;
            t.l_scale = {ScalePrediction{1.0, false}, {h, true}, {1.0, false}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::Case3ThmA: {
            if (!(r < 0)) throw InvalidParameter("Case3ThmA requires r < 0");
            t.pair = {p1, p2, p1};
            t.box[0] = {N - 1, N, phi(p1), 1.0};
            t.box[1] = {N - 1, N, phi(p2), 1.0};
            const double tau3c = -(A + a2) * N * N * N;
            auto c3 = [tau3c](double) { return tau3c; };
            t.box[2] = {-2 * N, -2 * N + 2, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = std::abs(a2 - 7 * A) * N * N * N;
            t.l_scale = {ScalePrediction{1.0, false}, {1.0, false}, {h, true}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::D1_neg: {
            if (!(r < 0)) throw InvalidParameter("D1_neg requires r < 0");
            // D1 arrangement: positions 1 and 2 share the first pair.
            t.pair = {p1, p1, p2};
            // Modulation band N/2 <= L <= N realized as the positive branch.
            auto band1 = [p1, N](double xi) { return phase_eval(p1, xi) + 0.75 * N; };
            t.box[0] = {N - 1, N, band1, N / 4.0};
            t.box[1] = {-N - 2, -N - 1, band1, N / 4.0};
            auto c3 = [A, N](double xi) { return 3.0 * A * N * N * xi; };
            t.box[2] = {1.0, 3.0, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = 6.0 * std::abs(A) * N * N;
            t.l_scale = {ScalePrediction{N, true}, {N, true}, {h, true}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::D2_pos_small: {
            if (!(r > 0 && r < 0.25)) throw InvalidParameter("D2_pos_small requires 0 < r < 1/4");
            const double m = 1.0 / std::sqrt(r);
            t.pair = {p1, p2, p1};
            t.box[0] = {N - invs, N, phi(p1), 1.0};
            t.box[1] = {m * N - invs, m * N, phi(p2), 1.0};
            auto c3 = [A, B, N, m](double xi) {
                return 2.0 * A * (1.0 + m) * N * N * N - (B - 3.0 * A * N * N) * xi;
            };
            t.box[2] = {-(1.0 + m) * N, -(1.0 + m) * N + 2 * invs, c3,
                        detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = std::abs(A) * m * (1.0 + m) * (m + 2.0) * N * N * N;
            t.l_scale = {ScalePrediction{1.0, false}, {1.0, false}, {h, true}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::ND1_neg: {
            if (!(r < 0)) throw InvalidParameter("ND1_neg requires r < 0");
            t.pair = {p1, p2, p1};
            t.numerator_index = 0;
            const double X = std::pow(N, 1.5);
            auto band1 = [p1, X](double xi) { return phase_eval(p1, xi) + 0.75 * X; };
            auto band2 = [p2, X](double xi) { return phase_eval(p2, xi) + 0.75 * X; };
            t.box[0] = {N - invs, N, band1, X / 4.0};
            t.box[1] = {-N - invs, -N, band2, X / 4.0};
            const double tau3c = -(A - a2) * N * N * N;
            auto c3 = [tau3c](double) { return tau3c; };
            t.box[2] = {0.0, 2 * invs, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = std::abs(A - a2) * N * N * N;
            t.l_scale = {ScalePrediction{X, true}, {X, true}, {h, true}};
            t.h_scale = {h, true};
            break;
        }
        case FamilyTag::ND1_quarter: {
            if (r != 0.25) throw InvalidParameter("ND1_quarter requires r = 1/4");
            t.pair = {p1, p2, p1};
            t.numerator_index = 0;
            t.box[0] = {N - invs, N, phi(p1), 1.0};
            t.box[1] = {-2 * N - invs, -2 * N, phi(p2), 1.0};
            auto c3 = [A, B, N](double xi) {
                return -2.0 * A * N * N * N - (B - 3.0 * A * N * N) * xi;
            };
            t.box[2] = {N, N + 2 * invs, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            // Resonance nearly cancels: (xi2 + 2 xi1)^2 = O(1/N) kills the
            // cubic growth, so |H| and |L3| stay O(1); no positive lower
            // bound survives (the factor vanishes inside the box).
            const double h = 14.0 * std::abs(A);
            t.l_scale = {ScalePrediction{1.0, false}, {1.0, false}, {h, false}};
            t.h_scale = {h, false};
            break;
        }
        case FamilyTag::ND1_equal: {
            if (r != 1.0) throw InvalidParameter("ND1_equal requires r = 1");
            t.pair = {p1, p1, p1};
            t.numerator_index = 0;
            const double q = 1.0 / (N * N);
            t.box[0] = {N - q, N, phi(p1), 1.0};
            t.box[1] = {-N - 2 * q, -N - q, phi(p1), 1.0};
            auto c3 = [B](double xi) { return -B * xi; };
            t.box[2] = {q, 3 * q, c3, detail::computed_half_width(t.box[0], t.box[1], c3)};
            const double h = 6.0 * std::abs(A);
            t.l_scale = {ScalePrediction{1.0, false}, {1.0, false}, {h, false}};
            t.h_scale = {h, true};
            break;
        }
            default:
            throw UnknownCase("bad family tag");
    }
    return t;
}

/// Convenience: build the three boxes of a family at parameter N.
inline BoxTriple build_family(FamilyTag tag, double N) { return make_family(tag).build(N); }

namespace detail {

// Deterministic xorshift sampler: containment checks must be reproducible.
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    double next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return double(s >> 11) * 0x1.0p-53;
    }
};

} // namespace detail

/// True iff -(p1 + p2) lands in B3 for all sampled p1 in B1, p2 in B2,
/// including every pairing of the boxes' 4 corners.
inline bool minkowski_containment(const BoxSet& b1, const BoxSet& b2, const BoxSet& b3,
                                  int samples = 4096) {
    if (samples < 1000) throw InvalidParameter("minkowski_containment: samples >= 1000");
    auto corner = [](const BoxSet& b, int k) {
        const double xi = (k & 1) ? b.xi_hi : b.xi_lo;
        const double tau = b.center(xi) + ((k & 2) ? b.half_width : -b.half_width);
        return std::pair{xi, tau};
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            auto [x1, t1] = corner(b1, i);
            auto [x2, t2] = corner(b2, j);
            if (!b3.contains(-(x1 + x2), -(t1 + t2))) return false;
        }
    }
    detail::Rng rng;
    for (int k = 0; k < samples; ++k) {
        const double x1 = b1.xi_lo + (b1.xi_hi - b1.xi_lo) * rng.next();
        const double t1 = b1.center(x1) + b1.half_width * (2 * rng.next() - 1);
        const double x2 = b2.xi_lo + (b2.xi_hi - b2.xi_lo) * rng.next();
        const double t2 = b2.center(x2) + b2.half_width * (2 * rng.next() - 1);
        if (!b3.contains(-(x1 + x2), -(t1 + t2))) return false;
    }
    return true;
}

inline bool minkowski_containment(const BoxTriple& t, int samples = 4096) {
    return minkowski_containment(t.box[t.free_indices[0]], t.box[t.free_indices[1]],
                                 t.box[t.sum_index], samples);
}

/// Triple-convolution mass of the indicator test functions. Under the
/// Minkowski containment it equals the product of the free boxes' areas.
inline double convolution_mass(const BoxSet& b1, const BoxSet& b2, const BoxSet& b3) {
    if (!minkowski_containment(b1, b2, b3))
        throw ContainmentViolated("convolution_mass: B1 + B2 not contained in -B3");
    return b1.area() * b2.area();
}

inline double convolution_mass(const BoxTriple& t) {
    return convolution_mass(t.box[t.free_indices[0]], t.box[t.free_indices[1]],
                            t.box[t.sum_index]);
}

/// Brute-force cross-check of the convolution mass: 4-D midpoint rule over
/// B1 x B2 counting the cells whose negated sum lands in B3.
inline double convolution_mass_bruteforce(const BoxSet& b1, const BoxSet& b2, const BoxSet& b3,
                                          int n = 24) {
    double total = 0;
    const double dx1 = (b1.xi_hi - b1.xi_lo) / n, dt1 = 2 * b1.half_width / n;
    const double dx2 = (b2.xi_hi - b2.xi_lo) / n, dt2 = 2 * b2.half_width / n;
    for (int i = 0; i < n; ++i) {
        const double x1 = b1.xi_lo + (i + 0.5) * dx1;
        for (int j = 0; j < n; ++j) {
            const double t1 = b1.center(x1) - b1.half_width + (j + 0.5) * dt1;
            for (int k = 0; k < n; ++k) {
                const double x2 = b2.xi_lo + (k + 0.5) * dx2;
                const double base2 = b2.center(x2) - b2.half_width;
                for (int l = 0; l < n; ++l) {
                    const double t2 = base2 + (l + 0.5) * dt2;
                    if (b3.contains(-(x1 + x2), -(t1 + t2))) total += dx1 * dt1 * dx2 * dt2;
                }
            }
        }
    }
    return total;
}

namespace detail {

/// Range of |L| = |tau - phi_pair(xi)| over a box, by dense xi sampling.
inline std::pair<double, double> abs_l_range(const BoxSet& b, const PhaseFunction& p) {
    double lo = 1e300, hi = 0;
    const int n = 128;
    for (int i = 0; i <= n; ++i) {
        const double xi = b.xi_lo + (b.xi_hi - b.xi_lo) * i / n;
        const double lc = b.center(xi) - phase_eval(p, xi);
        const double lmax = std::abs(lc) + b.half_width;
        const double lmin = std::max(0.0, std::abs(lc) - b.half_width);
        lo = std::min(lo, lmin);
        hi = std::max(hi, lmax);
    }
    return {lo, hi};
}

inline std::pair<double, double> abs_range(double lo, double hi) {
    if (lo <= 0 && hi >= 0) return {0.0, std::max(-lo, hi)};
    if (hi < 0) return {-hi, -lo};
    return {lo, hi};
}

/// Worst-case (infimum) value of <x>^e over |x| in [lo, hi].
inline double worst_bracket_pow(double lo, double hi, double e) {
    return e >= 0 ? std::pow(1.0 + lo, e) : std::pow(1.0 + hi, e);
}

} // namespace detail

/// Conservative lower bound for the dual-form integral ratio with indicator
/// test functions on the boxes: the weight's infimum over the box triple
/// times the convolution mass, divided by the product of L2 norms
/// (= product of the areas' square roots). This is the quantity whose
/// growth in N witnesses failure of the estimate.
inline double ratio_estimate(const BoxTriple& t, double s, double b) {
    // Containment gate: corners only (cheap); callers that need the full
    // statistical check run minkowski_containment themselves.
    const BoxSet& f1 = t.box[t.free_indices[0]];
    const BoxSet& f2 = t.box[t.free_indices[1]];
    const BoxSet& sum = t.box[t.sum_index];
    auto corner = [](const BoxSet& bx, int k) {
        const double xi = (k & 1) ? bx.xi_hi : bx.xi_lo;
        return std::pair{xi, bx.center(xi) + ((k & 2) ? bx.half_width : -bx.half_width)};
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto [x1, t1] = corner(f1, i);
            auto [x2, t2] = corner(f2, j);
            if (!sum.contains(-(x1 + x2), -(t1 + t2)))
                throw ContainmentViolated("ratio_estimate: corner escapes the sum box");
        }

    auto xi_abs = [](const BoxSet& bx) {
        return detail::abs_range(bx.xi_lo, bx.xi_hi);
    };
    auto [x1lo, x1hi] = xi_abs(t.box[0]);
    auto [x2lo, x2hi] = xi_abs(t.box[1]);
    auto [x3lo, x3hi] = xi_abs(t.box[2]);

    // |xi_num| lower end; <xi3>^s / (<xi1>^s <xi2>^s) worst case.
    const auto& numbox = t.box[t.numerator_index];
    auto [nlo, nhi] = detail::abs_range(numbox.xi_lo, numbox.xi_hi);
    (void)nhi;
    double weight = nlo;
    weight *= detail::worst_bracket_pow(x3lo, x3hi, s);
    weight *= detail::worst_bracket_pow(x1lo, x1hi, -s);
    weight *= detail::worst_bracket_pow(x2lo, x2hi, -s);
    for (int i = 0; i < 3; ++i) {
        auto [llo, lhi] = detail::abs_l_range(t.box[i], t.pair[i]);
        const double e = (i == 2) ? -(1.0 - b) : -b;
        weight *= detail::worst_bracket_pow(llo, lhi, e);
    }

    const double mass = f1.area() * f2.area();
    const double rhs = std::sqrt(t.box[0].area() * t.box[1].area() * t.box[2].area());
    return weight * mass / rhs;
}

/// Necessary conditions on (s, b) implied by each family (paper section 5).
inline std::vector<NecessaryCondition> necessary_conditions(FamilyTag tag) {
    return {make_family(tag).necessary_condition()};
}

/// Log-log growth fit of ratio_estimate over an N sweep. Requires >= 4
/// points spanning >= 2 decades.
inline SweepFit fit_growth(const BoxFamily& fam, double s, double b,
                           const std::vector<double>& n_list) {
    if (n_list.size() < 4) throw InvalidParameter("fit_growth: need >= 4 N values");
    double lo = n_list.front(), hi = n_list.front();
    for (double n : n_list) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    if (hi < 100.0 * lo) throw InvalidParameter("fit_growth: N must span >= 2 decades");
    std::vector<double> values;
    values.reserve(n_list.size());
    for (double n : n_list) values.push_back(ratio_estimate(fam.build(n), s, b));
    return fit_power_law(n_list, values);
}

inline SweepFit fit_growth(FamilyTag tag, double s, double b, const std::vector<double>& n_list) {
    return fit_growth(make_family(tag), s, b, n_list);
}

/// Exact feasibility of the conjunction of Claim A and Claim B conditions:
/// a b exists iff 1/4 - s/3 <= (4 + 2s)/3, i.e. exactly when s >= -13/12.
inline bool claims_feasible(const Rational& s) {
    const Rational lower = Rational(1, 4) - s / 3;
    const Rational upper = (Rational(4) + s * 2) / 3;
    return lower <= upper;
}

} // namespace ckdv
