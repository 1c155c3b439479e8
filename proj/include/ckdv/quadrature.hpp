#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "ckdv/errors.hpp"
#include "ckdv/resonance.hpp"

namespace ckdv {

/// Result of an improper integral over the real line.
struct IntegralResult {
    double value = 0;
    double est_error = 0;
    double truncation_radius = 0; // |x| beyond which the tail substitution starts
};

/// Log-log power-law fit over a parameter sweep.
struct SweepFit {
    std::vector<double> parameters;
    std::vector<double> values;
    double fitted_exponent = 0;
    double r_squared = 0;
};

/// Least squares on (log parameter, log value). Requires >= 4 positive
/// samples; two points cannot distinguish slope noise.
inline SweepFit fit_power_law(std::vector<double> params, std::vector<double> values) {
    if (params.size() != values.size() || params.size() < 4)
        throw InvalidParameter("fit_power_law: need >= 4 matched samples");
    const std::size_t n = params.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(params[i] > 0) || !(values[i] > 0))
            throw InvalidParameter("fit_power_law: samples must be positive");
        lx[i] = std::log(params[i]);
        ly[i] = std::log(values[i]);
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double inter = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = inter + slope * lx[i];
        ss_res += (ly[i] - fit) * (ly[i] - fit);
        ss_tot += (ly[i] - mean) * (ly[i] - mean);
    }
    SweepFit out;
    out.parameters = std::move(params);
    out.values = std::move(values);
    out.fitted_exponent = slope;
    out.r_squared = ss_tot > 0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return out;
}

namespace detail {

// Gauss7-Kronrod15 nodes/weights on [-1, 1] (QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GKResult {
    double value;
    double error;
};

template <typename F>
GKResult gk15(const F& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double resk = 0, resg = 0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kGK15Nodes[i];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        const double fsum = (i == 7) ? f1 : f1 + f2;
        resk += kGK15WeightsK[i] * fsum;
        // Odd Kronrod indices (and the centre) are the embedded Gauss-7 nodes.
        if (i % 2 == 1 || i == 7) resg += kGK15WeightsG[i / 2] * fsum;
    }
    resk *= h;
    resg *= h;
    return {resk, std::abs(resk - resg)};
}

struct Segment {
    double a, b;
    double value, error;
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

/// Adaptive GK15 over an explicit partition; refines the worst segment until
/// the summed error estimate is below rel_tol * |total| (or abs floor).
template <typename F>
GKResult adaptive(const F& f, std::vector<std::pair<double, double>> segments, double rel_tol,
                  int max_intervals = 4000) {
    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> heap;
    double total = 0, err = 0;
    for (auto [a, b] : segments) {
        if (!(b > a)) continue;
        auto r = gk15(f, a, b);
        heap.push({a, b, r.value, r.error});
        total += r.value;
        err += r.error;
    }
    int n = int(heap.size());
    while (n < max_intervals && !heap.empty()) {
        if (err <= rel_tol * std::max(std::abs(total), 1e-300) || err < 1e-300) break;
        Segment worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (auto [a, b] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            auto r = gk15(f, a, b);
            heap.push({a, b, r.value, r.error});
            total += r.value;
            err += r.error;
        }
        ++n;
    }
    return {total, err};
}

} // namespace detail

/// Integral of f over the whole line. f must decay like |x|^{-p} with p > 1.
/// The core [-R, R] is split at the supplied breakpoints (roots/kinks); each
/// tail is mapped to (0, 1/R] by u = 1/x, which converges exactly when the
/// decay is integrable, and the endpoint behaviour u^{p-2} is handled by
/// adaptive refinement (GK nodes are interior, u = 0 is never evaluated).
template <typename F>
IntegralResult integrate_line(const F& f, std::vector<double> breakpoints, double radius,
                              double rel_tol = 1e-8) {
    std::vector<std::pair<double, double>> core;
    breakpoints.push_back(-radius);
    breakpoints.push_back(radius);
    std::sort(breakpoints.begin(), breakpoints.end());
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double a = std::max(breakpoints[i], -radius);
        double b = std::min(breakpoints[i + 1], radius);
        if (b > a) core.push_back({a, b});
    }
    auto core_res = detail::adaptive(f, core, rel_tol);

    auto tail_pos = [&f](double u) { return f(1.0 / u) / (u * u); };
    auto tail_neg = [&f](double u) { return f(-1.0 / u) / (u * u); };
    auto tp = detail::adaptive(tail_pos, {{0.0, 1.0 / radius}}, rel_tol, 800);
    auto tn = detail::adaptive(tail_neg, {{0.0, 1.0 / radius}}, rel_tol, 800);

    IntegralResult out;
    out.value = core_res.value + tp.value + tn.value;
    out.est_error = core_res.error + tp.error + tn.error;
    out.truncation_radius = radius;
    return out;
}

/// Polynomial c[0] + c[1] x + ... + c[d] x^d with real-root extraction for
/// d <= 3 (used to force subdivision at the integrand's plateau regions).
struct Poly {
    std::vector<double> c;

    int degree() const {
        int d = int(c.size()) - 1;
        while (d > 0 && c[d] == 0.0) --d;
        return d;
    }
    double eval(double x) const {
        double v = 0;
        for (int i = int(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
        return v;
    }
    double lead() const { return c[degree()]; }
};

namespace detail {

inline void polish_root(const Poly& p, double& x) {
    for (int it = 0; it < 3; ++it) {
        double f = p.eval(x);
        double h = 1e-7 * (1.0 + std::abs(x));
        double df = (p.eval(x + h) - p.eval(x - h)) / (2 * h);
        if (df != 0) x -= f / df;
    }
}

} // namespace detail

/// Real roots of a degree <= 3 polynomial (ascending, possibly empty).
inline std::vector<double> real_roots(const Poly& p) {
    const int d = p.degree();
    std::vector<double> roots;
    if (d <= 0) return roots;
    if (d == 1) {
        roots.push_back(-p.c[0] / p.c[1]);
        return roots;
    }
    if (d == 2) {
        const double a = p.c[2], b = p.c[1], c = p.c[0];
        const double disc = b * b - 4 * a * c;
        if (disc < 0) return roots;
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
        roots.push_back(q / a);
        if (q != 0)
            roots.push_back(c / q);
        else
            roots.push_back(-b / a - q / a);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // Depressed cubic t^3 + pt + q with x = t - b/(3a).
    const double a = p.c[3], b = p.c[2], c = p.c[1], dd = p.c[0];
    const double shift = b / (3 * a);
    const double p3 = (3 * a * c - b * b) / (3 * a * a);
    const double q3 = (2 * b * b * b - 9 * a * b * c + 27 * a * a * dd) / (27 * a * a * a);
    const double disc = q3 * q3 / 4 + p3 * p3 * p3 / 27;
    if (disc > 0) {
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-q3 / 2 + sq);
        const double v = std::cbrt(-q3 / 2 - sq);
        roots.push_back(u + v - shift);
    } else if (disc == 0) {
        if (q3 == 0) {
            roots.push_back(-shift);
        } else {
            const double u = std::cbrt(-q3 / 2);
            roots.push_back(2 * u - shift);
            roots.push_back(-u - shift);
        }
    } else {
        const double rho = std::sqrt(-p3 * p3 * p3 / 27);
        const double theta = std::acos(std::clamp(-q3 / (2 * rho), -1.0, 1.0));
        const double m = 2 * std::sqrt(-p3 / 3);
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos((theta + 2 * M_PI * k) / 3) - shift);
    }
    for (auto& r : roots) detail::polish_root(p, r);
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace detail {

/// Radius beyond which |poly| is dominated by half its leading term.
inline double dominance_radius(const Poly& p) {
    const int d = p.degree();
    double s = 0;
    for (int i = 0; i < d; ++i) s += std::abs(p.c[i]);
    return std::max(2.0, 2.0 * (1.0 + s / std::abs(p.c[d])));
}

} // namespace detail

/// Lemma-4.1 integral: int dx / (<x - alpha>^{rho1} <-x - beta>^{rho2}).
/// Decays like <alpha + beta>^{-rho2} in the peak separation.
inline IntegralResult tau_convolution(double rho1, double rho2, double alpha, double beta,
                                      double rel_tol = 1e-8) {
    if (!(rho1 > 1)) throw NonIntegrable("tau_convolution: rho1 must exceed 1");
    if (rho2 < 0 || rho2 > rho1) throw InvalidParameter("tau_convolution: need 0 <= rho2 <= rho1");
    auto f = [=](double x) {
        return std::pow(bracket(x - alpha), -rho1) * std::pow(bracket(-x - beta), -rho2);
    };
    const double radius = std::max({std::abs(alpha), std::abs(beta), 1.0}) * 2.0 + 10.0;
    return integrate_line(f, {alpha, -beta}, radius, rel_tol);
}

/// Lemma-4.2 integral: int dx / <g(x)>^{rho} for a degree 2 or 3 polynomial.
/// Validity thresholds: rho > 1/2 (quadratic), rho > 1/3 (cubic).
inline IntegralResult poly_decay_integral(const Poly& g, double rho, double rel_tol = 1e-8) {
    const int d = g.degree();
    if (d != 2 && d != 3) throw InvalidParameter("poly_decay_integral: degree must be 2 or 3");
    if (g.lead() == 0) throw InvalidParameter("poly_decay_integral: zero leading coefficient");
    if ((d == 2 && rho <= 0.5) || (d == 3 && rho <= 1.0 / 3.0))
        throw NonIntegrable("poly_decay_integral: rho at or below the degree threshold");
    auto f = [&g, rho](double x) { return std::pow(bracket(g.eval(x)), -rho); };
    auto roots = real_roots(g);
    const double radius =
        std::max(detail::dominance_radius(g),
                 roots.empty() ? 0.0 : 2.0 * std::max(std::abs(roots.front()), std::abs(roots.back())) + 2.0);
    std::vector<double> breaks = roots;
    // Extra breakpoints half-way between roots sharpen the plateau handling.
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        breaks.push_back(0.5 * (roots[i] + roots[i + 1]));
    return integrate_line(f, breaks, radius, rel_tol);
}

/// Lemma-4.3: integral of <s2 x^2 + s1 x + s0>^{-rho} (rho > 1) and its
/// analytic bound |s2|^{-1/2} <s0 - s1^2/(4 s2)>^{-1/2}.
struct BoundedIntegral {
    IntegralResult integral;
    double bound;
};

inline BoundedIntegral quad_sharp_bound(double s2, double s1, double s0, double rho,
                                        double rel_tol = 1e-8) {
    if (!(rho > 1)) throw NonIntegrable("quad_sharp_bound: rho must exceed 1");
    if (s2 == 0) throw InvalidParameter("quad_sharp_bound: s2 must be nonzero");
    Poly g{{s0, s1, s2}};
    auto integral = poly_decay_integral(g, rho, rel_tol);
    const double completed = s0 - s1 * s1 / (4 * s2);
    const double bound = std::pow(std::abs(s2), -0.5) * std::pow(bracket(completed), -0.5);
    return {integral, bound};
}

/// Lemma-4.4: integral of <x^3 + s2 x^2 + s1 x + s0>^{-rho} (rho > 1) and
/// the bound <3 s1 - s2^2>^{-1/4}.
inline BoundedIntegral cubic_sharp_bound(double s2, double s1, double s0, double rho,
                                         double rel_tol = 1e-8) {
    if (!(rho > 1)) throw NonIntegrable("cubic_sharp_bound: rho must exceed 1");
    Poly g{{s0, s1, s2, 1.0}};
    auto integral = poly_decay_integral(g, rho, rel_tol);
    const double bound = std::pow(bracket(3 * s1 - s2 * s2), -0.25);
    return {integral, bound};
}

/// The family y^3 - 3a^2 y + 2a^3 = (y-a)^2 (y+2a) whose integral is
/// bounded below by ~ <a>^{-1/2}; it witnesses the sharpness of the 1/4
/// power in the cubic bound.
inline Poly cubic_sharp_family(double a) { return Poly{{2 * a * a * a, -3 * a * a, 0.0, 1.0}}; }

/// Search domain for the linear-coupling supremum.
struct CouplingGrid {
    double xi_max = 50.0;
    int samples = 4096;
};

struct SupremumEstimate {
    double sup = 0;
    double xi_witness = 0;
    double tau_witness = 0;
};

/// Estimates sup_{xi,tau} |xi| / (<tau - phi1(xi)>^b <tau - phi2(xi)>^{1-b}).
/// For 1/2 < b the inner problem over tau is solved exactly: the minimum of
/// the weight product sits at tau = phi1(xi) and equals <phi2 - phi1>^{1-b},
/// leaving a 1-D sweep over xi (grid scan plus golden-section refinement).
/// Finite and range-stable when alpha1 != alpha2 with |beta2 - beta1| small.
inline SupremumEstimate coupling_supremum(double alpha1, double alpha2, double beta1, double beta2,
                                          double b, const CouplingGrid& grid = {}) {
    if (!(b > 0.5) || !(b < 1.0))
        throw InvalidParameter("coupling_supremum: need 1/2 < b < 1");
    auto value = [=](double xi) {
        const double gap = (alpha1 - alpha2) * xi * xi * xi - (beta1 - beta2) * xi;
        return std::abs(xi) * std::pow(bracket(gap), b - 1.0);
    };
    double best_xi = 0, best = 0;
    for (int i = 0; i <= grid.samples; ++i) {
        const double xi = -grid.xi_max + 2.0 * grid.xi_max * i / grid.samples;
        const double v = value(xi);
        if (v > best) {
            best = v;
            best_xi = xi;
        }
    }
    double lo = best_xi - 2.0 * grid.xi_max / grid.samples;
    double hi = best_xi + 2.0 * grid.xi_max / grid.samples;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = value(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = value(x2);
        }
    }
    SupremumEstimate out;
    out.xi_witness = 0.5 * (lo + hi);
    out.sup = value(out.xi_witness);
    if (best > out.sup) {
        out.sup = best;
        out.xi_witness = best_xi;
    }
    out.tau_witness = alpha1 * std::pow(out.xi_witness, 3) - beta1 * out.xi_witness;
    return out;
}

/// Restricted supremum of the same quantity over the failure set
///   E_N = { N-1 <= xi <= N, |tau - phi^{alpha,beta1}(xi)| <= 1 }
/// used when alpha1 = alpha2. With distinct beta shifts it grows like N^b.
inline SupremumEstimate prop23_restricted_sup(double alpha, double beta1, double beta2, double b,
                                              double N, int samples = 512) {
    if (N < 2) throw InvalidParameter("prop23_restricted_sup: N >= 2");
    SupremumEstimate out;
    for (int i = 0; i <= samples; ++i) {
        const double xi = N - 1 + double(i) / samples;
        const double phi1 = alpha * xi * xi * xi - beta1 * xi;
        for (int j = 0; j <= samples / 8; ++j) {
            const double L1 = -1.0 + 2.0 * j / (samples / 8);
            const double L2 = L1 + (beta2 - beta1) * xi;
            const double v = xi * std::pow(bracket(L1), -b) * std::pow(bracket(L2), b - 1.0);
            if (v > out.sup) {
                out.sup = v;
                out.xi_witness = xi;
                out.tau_witness = phi1 + L1;
            }
        }
    }
    return out;
}

} // namespace ckdv
