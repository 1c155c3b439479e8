#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckdv/rational.hpp"
#include "ckdv/system_model.hpp"

namespace ckdv {

enum class Threshold { Strict, Closed }; // s > s*  vs  s >= s*
enum class WellPosedness { LWP, GWP, Unclassified };

inline std::string to_string(Threshold t) { return t == Threshold::Strict ? "strict" : "closed"; }
inline std::string to_string(WellPosedness w) {
    switch (w) {
        case WellPosedness::LWP: return "LWP";
        case WellPosedness::GWP: return "GWP";
        default: return "Unclassified";
    }
}

/// Well-posedness classification result. For Unclassified verdicts s_star
/// and threshold_kind carry no meaning.
struct Verdict {
    int case_id = 0;
    Rational s_star;
    Threshold threshold_kind = Threshold::Closed;
    std::string classification_basis;
    WellPosedness well_posedness = WellPosedness::LWP;

    /// Human rendering like "s >= 3/4" or "s > -3/4".
    std::string range_str() const {
        if (well_posedness == WellPosedness::Unclassified) return "unclassified";
        return (threshold_kind == Threshold::Strict ? "s > " : "s >= ") + s_star.str();
    }

    friend bool operator==(const Verdict& x, const Verdict& y) {
        if (x.well_posedness != y.well_posedness) return false;
        if (x.well_posedness == WellPosedness::Unclassified) return true;
        return x.s_star == y.s_star && x.threshold_kind == y.threshold_kind;
    }
};

enum class EstimateType { D1, D2, ND1, ND2 };

inline std::string to_string(EstimateType t) {
    switch (t) {
        case EstimateType::D1: return "D1";
        case EstimateType::D2: return "D2";
        case EstimateType::ND1: return "ND1";
        default: return "ND2";
    }
}

struct BilinearQuery {
    DispersionRatio r;
    EstimateType estimate_type;
};

/// Closed or half-open range of admissible temporal exponents b.
struct BRange {
    Rational lower, upper;
    bool lower_closed = true, upper_closed = true;

    bool contains(const Rational& b) const {
        if (b < lower || b > upper) return false;
        if (b == lower && !lower_closed) return false;
        if (b == upper && !upper_closed) return false;
        return true;
    }
};

namespace detail {

enum class RClass { Neg, PosSmall, Quarter, MidLow, One, MidHigh, Four, Large };

inline RClass classify_r(double r) {
    if (r < 0) return RClass::Neg;
    if (r == 0.25) return RClass::Quarter;
    if (r < 0.25) return RClass::PosSmall;
    if (r == 1.0) return RClass::One;
    if (r < 1.0) return RClass::MidLow;
    if (r == 4.0) return RClass::Four;
    if (r < 4.0) return RClass::MidHigh;
    return RClass::Large;
}

inline Verdict make_lwp(int case_id, Rational s, Threshold t, std::string basis) {
    return {case_id, s, t, std::move(basis), WellPosedness::LWP};
}

} // namespace detail

/// Critical index and strictness for one bilinear-estimate cell. The
/// divergence estimate with r < 0 is the deep case: the estimate holds down
/// to and including s = -13/12 (with b pinned accordingly), so that cell is
/// closed at -13/12.
inline Verdict bilinear_critical(const BilinearQuery& q) {
    if (q.r.r == 0) throw InvalidParameter("bilinear_critical: r must be nonzero");
    using detail::RClass;
    const RClass rc = detail::classify_r(q.r.r);
    const bool nd = q.estimate_type == EstimateType::ND1 || q.estimate_type == EstimateType::ND2;

    Rational s;
    Threshold t;
    int column; // 1..5 in table order: r<0, 0<r<1/4, r=1/4, r>1/4 != 1, r=1
    switch (rc) {
        case RClass::Neg:
            column = 1;
            if (q.estimate_type == EstimateType::D2) {
                s = Rational(-13, 12);
                t = Threshold::Closed;
            } else {
                s = Rational(-3, 4);
                t = Threshold::Strict;
            }
            break;
        case RClass::PosSmall:
            column = 2;
            s = Rational(-3, 4);
            t = Threshold::Strict;
            break;
        case RClass::Quarter:
            column = 3;
            s = Rational(3, 4);
            t = Threshold::Closed;
            break;
        case RClass::One:
            column = 5;
            if (nd) {
                s = Rational(0);
                t = Threshold::Strict;
            } else {
                s = Rational(-3, 4);
                t = Threshold::Strict;
            }
            break;
        default: // r > 1/4, r != 1
            column = 4;
            s = Rational(0);
            t = Threshold::Closed;
            break;
    }
    return detail::make_lwp(column, s, t, "bilinear " + to_string(q.estimate_type));
}

enum class Trouble { T1, T2, T3 }; // resonant, coherent, non-divergence high-high

/// Trouble tags of the matching cell: which obstructions drive the critical
/// index for the queried estimate.
inline std::set<Trouble> trouble_diagnosis(const BilinearQuery& q) {
    if (q.r.r == 0) throw InvalidParameter("trouble_diagnosis: r must be nonzero");
    using detail::RClass;
    const RClass rc = detail::classify_r(q.r.r);
    const bool nd = q.estimate_type == EstimateType::ND1 || q.estimate_type == EstimateType::ND2;
    switch (rc) {
        case RClass::Neg:
            if (q.estimate_type == EstimateType::D2) return {};
            if (nd) return {Trouble::T3};
            return {Trouble::T2};
        case RClass::PosSmall:
            if (nd) return {Trouble::T2, Trouble::T3};
            return {Trouble::T2};
        case RClass::Quarter:
            return {Trouble::T1, Trouble::T2};
        case RClass::One:
            if (nd) return {Trouble::T2, Trouble::T3};
            return {Trouble::T2};
        default:
            return {Trouble::T1};
    }
}

/// The bilinear estimates each nonzero coefficient of the system calls for,
/// expressed as (ratio, type) queries against the tables. The ratio is r,
/// 1/r or 1 depending on which equation the term sits in and which spaces
/// its factors live in.
inline std::vector<BilinearQuery> required_bilinear(const DiagonalSystem& sys) {
    const double r = sys.a2 / sys.a1;
    std::vector<BilinearQuery> out;
    auto add = [&out](double ratio, EstimateType t) { out.push_back({{ratio}, t}); };
    if (sys.c11 != 0) add(1.0, EstimateType::D1);
    if (sys.c22 != 0) add(1.0, EstimateType::D1);
    if (sys.c21 != 0) add(r, EstimateType::D1);
    if (sys.c12 != 0) add(1.0 / r, EstimateType::D1);
    if (sys.d11 == sys.d12) {
        if (sys.d11 != 0) add(r, EstimateType::D2);
    } else {
        if (sys.d11 != 0) add(r, EstimateType::ND1);
        if (sys.d12 != 0) add(r, EstimateType::ND2);
    }
    if (sys.d21 == sys.d22) {
        if (sys.d21 != 0) add(1.0 / r, EstimateType::D2);
    } else {
        if (sys.d21 != 0) add(1.0 / r, EstimateType::ND2);
        if (sys.d22 != 0) add(1.0 / r, EstimateType::ND1);
    }
    return out;
}

/// Table-1 classification keyed on r and the coefficient zero-pattern.
inline Verdict classify(const DiagonalSystem& sys) {
    if (sys.a1 == 0 || sys.a2 == 0) throw InvalidParameter("classify: a1, a2 must be nonzero");
    const double r = sys.a2 / sys.a1;
    using detail::RClass;
    using detail::make_lwp;
    const bool c_zero = sys.c11 == 0 && sys.c12 == 0 && sys.c21 == 0 && sys.c22 == 0;
    const bool div = sys.divergence_form();

    switch (detail::classify_r(r)) {
        case RClass::Neg:
            if (c_zero && div)
                return make_lwp(1, Rational(-13, 12), Threshold::Closed,
                                "r<0, (c)=0, divergence form");
            return make_lwp(1, Rational(-3, 4), Threshold::Strict, "r<0, general pattern");
        case RClass::PosSmall:
            if (sys.c12 == 0 && sys.d21 == 0 && sys.d22 == 0)
                return make_lwp(2, Rational(-3, 4), Threshold::Strict,
                                "0<r<1/4, c12=d21=d22=0");
            return make_lwp(2, Rational(0), Threshold::Closed, "0<r<1/4, general pattern");
        case RClass::Quarter:
            if (sys.c21 == 0 && sys.d11 == 0 && sys.d12 == 0)
                return make_lwp(3, Rational(0), Threshold::Closed, "r=1/4, c21=d11=d12=0");
            return make_lwp(3, Rational(3, 4), Threshold::Closed, "r=1/4, general pattern");
        case RClass::MidLow:
            return make_lwp(4, Rational(0), Threshold::Closed, "1/4<r<1");
        case RClass::One:
            if (sys.b12 != 0 || sys.b21 != 0) {
                // Equal dispersion with first-order coupling: the linear
                // coupling estimate fails, the tables do not apply.
                Verdict v;
                v.case_id = 5;
                v.well_posedness = WellPosedness::Unclassified;
                v.classification_basis = "r=1 with b12 or b21 nonzero: not covered";
                return v;
            }
            if (div)
                return make_lwp(5, Rational(-3, 4), Threshold::Strict,
                                "r=1, b12=b21=0, divergence form");
            return make_lwp(5, Rational(0), Threshold::Strict,
                            "r=1, b12=b21=0, non-divergence form");
        case RClass::MidHigh:
            return make_lwp(6, Rational(0), Threshold::Closed, "1<r<4");
        case RClass::Four:
            if (sys.c12 == 0 && sys.d21 == 0 && sys.d22 == 0)
                return make_lwp(7, Rational(0), Threshold::Closed, "r=4, c12=d21=d22=0");
            return make_lwp(7, Rational(3, 4), Threshold::Closed, "r=4, general pattern");
        default:
            if (sys.c21 == 0 && sys.d11 == 0 && sys.d12 == 0)
                return make_lwp(8, Rational(-3, 4), Threshold::Strict, "r>4, c21=d11=d12=0");
            return make_lwp(8, Rational(0), Threshold::Closed, "r>4, general pattern");
    }
}

/// Near-boundary warnings for CLI display: the verdict is genuinely
/// discontinuous across r in {0, 1/4, 1, 4} and across coefficient zero
/// patterns, so values within tol of a boundary are flagged, never snapped.
inline std::vector<std::string> classification_warnings(const DiagonalSystem& sys,
                                                        double tol = 1e-9) {
    std::vector<std::string> w;
    const double r = sys.a2 / sys.a1;
    for (double boundary : {0.0, 0.25, 1.0, 4.0}) {
        if (r != boundary && std::abs(r - boundary) <= tol)
            w.push_back("r is within tolerance of boundary " + std::to_string(boundary));
    }
    auto near_zero = [&](double v, const char* name) {
        if (v != 0 && std::abs(v) <= tol)
            w.push_back(std::string(name) + " is nonzero but within tolerance of 0");
    };
    near_zero(sys.c11, "c11");
    near_zero(sys.c12, "c12");
    near_zero(sys.c21, "c21");
    near_zero(sys.c22, "c22");
    near_zero(sys.d11 - sys.d12, "d11-d12");
    near_zero(sys.d21 - sys.d22, "d21-d22");
    near_zero(sys.b12, "b12");
    near_zero(sys.b21, "b21");
    return w;
}

/// Admissible temporal exponent range for the divergence estimate with
/// r < 0 at regularity s:
///   -13/12 <= s <= -1 : [1/4 - s/3, 4/3 + 2s/3]
///   -1 < s < -3/4     : [1/4 - s/3, 1 + s/3]
///   s >= -3/4         : (1/2, 3/4) open
inline BRange admissible_b(const Rational& s) {
    if (s < Rational(-13, 12)) throw OutOfDomain("admissible_b: s < -13/12");
    if (s <= Rational(-1)) {
        return {Rational(1, 4) - s / 3, Rational(4, 3) + s * Rational(2, 3), true, true};
    }
    if (s < Rational(-3, 4)) {
        return {Rational(1, 4) - s / 3, Rational(1) + s / 3, true, true};
    }
    return {Rational(1, 2), Rational(3, 4), false, false};
}

/// LWP and GWP classification of the named systems (parameter-keyed tables).
inline std::pair<Verdict, Verdict> classify_named(SystemKind kind, const NamedParams& p) {
    using detail::make_lwp;
    auto gwp = [](int case_id, Rational s, Threshold t, std::string basis) {
        return Verdict{case_id, s, t, std::move(basis), WellPosedness::GWP};
    };
    auto unclassified = [](std::string basis) {
        Verdict v;
        v.well_posedness = WellPosedness::Unclassified;
        v.classification_basis = std::move(basis);
        return v;
    };

    switch (kind) {
        case SystemKind::MajdaBiello: {
            const double a2 = p.a2;
            if (a2 == 0) throw InvalidParameter("Majda-Biello requires a2 != 0");
            Verdict lwp;
            if (a2 < 0 || a2 == 1 || a2 > 4)
                lwp = make_lwp(1, Rational(-3, 4), Threshold::Strict, "M-B a2 in (-inf,0)|{1}|(4,inf)");
            else if (a2 == 4)
                lwp = make_lwp(3, Rational(3, 4), Threshold::Closed, "M-B a2 = 4");
            else
                lwp = make_lwp(2, Rational(0), Threshold::Closed, "M-B a2 in (0,1)|(1,4)");
            Verdict g;
            if (a2 == 1)
                g = gwp(1, Rational(-3, 4), Threshold::Strict, "M-B a2 = 1");
            else if (a2 == 4)
                g = gwp(3, Rational(1), Threshold::Closed, "M-B a2 = 4");
            else
                g = gwp(2, Rational(0), Threshold::Closed, "M-B a2 not in {1,4}");
            return {lwp, g};
        }
        case SystemKind::HirotaSatsuma: {
            const double a1 = p.a1;
            if (a1 == 0) throw InvalidParameter("Hirota-Satsuma requires a1 != 0");
            Verdict lwp;
            if (a1 < 0 || (a1 > 0 && a1 < 0.25))
                lwp = make_lwp(1, Rational(-3, 4), Threshold::Strict, "H-S a1 in (-inf,0)|(0,1/4)");
            else if (a1 == 0.25)
                lwp = make_lwp(4, Rational(3, 4), Threshold::Closed, "H-S a1 = 1/4");
            else if (a1 == 1)
                lwp = make_lwp(3, Rational(0), Threshold::Strict, "H-S a1 = 1");
            else
                lwp = make_lwp(2, Rational(0), Threshold::Closed, "H-S a1 in (1/4,1)|(1,inf)");
            Verdict g;
            if (!(p.c12 > 0))
                g = unclassified("H-S GWP needs c12 > 0");
            else if (a1 == 0.25)
                g = gwp(2, Rational(1), Threshold::Closed, "H-S a1 = 1/4, c12 > 0");
            else if (a1 == 1)
                g = unclassified("H-S GWP not covered at a1 = 1");
            else
                g = gwp(1, Rational(0), Threshold::Closed, "H-S a1 not in {1/4,1}, c12 > 0");
            return {lwp, g};
        }
        case SystemKind::GearGrimshaw: {
            if (!(p.rho1 > 0) || !(p.rho2 > 0))
                throw InvalidParameter("Gear-Grimshaw requires rho1, rho2 > 0");
            const double q = p.rho2 * p.sigma3 * p.sigma3;
            if (q == 1.0) {
                auto u = unclassified("G-G with rho2 sigma3^2 = 1: zero eigenvalue");
                return {u, u};
            }
            const bool quarter = gg_quarter_condition(p.rho1, p.rho2, p.sigma3);
            Verdict lwp;
            if (p.sigma3 == 0 && p.rho1 == 1)
                lwp = make_lwp(1, Rational(-3, 4), Threshold::Strict, "G-G sigma3=0, rho1=1");
            else if (q > 1)
                lwp = make_lwp(2, Rational(-3, 4), Threshold::Strict, "G-G rho2 sigma3^2 > 1");
            else if (quarter)
                lwp = make_lwp(4, Rational(3, 4), Threshold::Closed, "G-G quarter-ratio condition");
            else
                lwp = make_lwp(3, Rational(0), Threshold::Closed, "G-G rho2 sigma3^2 < 1, generic");
            Verdict g = quarter
                            ? gwp(2, Rational(1), Threshold::Closed, "G-G quarter-ratio condition")
                            : gwp(1, Rational(0), Threshold::Closed, "G-G generic");
            return {lwp, g};
        }
        default:
            throw InvalidParameter("classify_named: only M-B, H-S, G-G are tabulated");
    }
}

} // namespace ckdv
