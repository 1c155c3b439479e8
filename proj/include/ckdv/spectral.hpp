#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ckdv/errors.hpp"
#include "ckdv/fft.hpp"
#include "ckdv/system_model.hpp"

namespace ckdv {

/// Periodic space grid plus time-stepping parameters. The box approximates
/// the line: data must decay below roundoff at the edges, and wrap-around
/// bounds the valid horizon (fastest speed x T < L/2).
struct Grid {
    double L = 40.0 * M_PI;
    int n_modes = 256;
    double dt = 1e-4;
    double T = 1.0;

    void validate() const {
        if (!(L > 0) || !(dt > 0)) throw InvalidParameter("grid: L and dt must be positive");
        if (n_modes < 32 || !detail::is_pow2(std::size_t(n_modes)))
            throw InvalidParameter("grid: n_modes must be a power of two >= 32");
    }
    double dx() const { return L / n_modes; }
    double x(int j) const { return j * dx(); }
    /// Signed physical frequency of mode k: 2 pi k' / L with k' in [-n/2, n/2).
    double xi(int k) const {
        const int half = n_modes / 2;
        const int ks = (k < half) ? k : k - n_modes;
        return 2.0 * M_PI * ks / L;
    }
    /// 2/3-rule dealias cutoff: modes with |k'| > n/3 are zeroed.
    bool keep_mode(int k) const {
        const int half = n_modes / 2;
        const int ks = (k < half) ? k : k - n_modes;
        return std::abs(ks) <= n_modes / 3;
    }
};

/// Spectral representation of (u, v) at one time.
struct SpectralState {
    Grid grid;
    DiagonalSystem sys;
    std::vector<cplx> uhat, vhat; // unnormalized forward FFT of samples
    double t = 0;
};

namespace detail {

inline void dealias(const Grid& g, std::vector<cplx>& what) {
    for (int k = 0; k < g.n_modes; ++k)
        if (!g.keep_mode(k)) what[k] = 0.0;
}

} // namespace detail

/// Sample, transform, and dealias initial data.
inline SpectralState init(const Grid& grid, const DiagonalSystem& sys,
                          const std::function<double(double)>& u0,
                          const std::function<double(double)>& v0) {
    grid.validate();
    SpectralState st;
    st.grid = grid;
    st.sys = sys;
    st.uhat.resize(grid.n_modes);
    st.vhat.resize(grid.n_modes);
    for (int j = 0; j < grid.n_modes; ++j) {
        st.uhat[j] = u0(grid.x(j));
        st.vhat[j] = v0(grid.x(j));
    }
    fft_inplace(st.uhat, false);
    fft_inplace(st.vhat, false);
    detail::dealias(grid, st.uhat);
    detail::dealias(grid, st.vhat);
    return st;
}

inline SpectralState init(const Grid& grid, const DiagonalSystem& sys,
                          const std::vector<double>& u0, const std::vector<double>& v0) {
    grid.validate();
    if (int(u0.size()) != grid.n_modes || int(v0.size()) != grid.n_modes)
        throw GridMismatch("init: sample arrays must have n_modes entries");
    SpectralState st;
    st.grid = grid;
    st.sys = sys;
    st.uhat.assign(u0.begin(), u0.end());
    st.vhat.assign(v0.begin(), v0.end());
    fft_inplace(st.uhat, false);
    fft_inplace(st.vhat, false);
    detail::dealias(grid, st.uhat);
    detail::dealias(grid, st.vhat);
    return st;
}

/// Physical-space samples of one component (real part after inverse FFT).
inline std::vector<double> to_physical(const Grid& g, const std::vector<cplx>& what) {
    std::vector<cplx> w = what;
    fft_inplace(w, true);
    std::vector<double> out(g.n_modes);
    for (int j = 0; j < g.n_modes; ++j) out[j] = w[j].real();
    return out;
}

/// Max |imaginary part| of the inverse transform, for reality checks.
inline double imag_residual(const Grid& g, const std::vector<cplx>& what) {
    std::vector<cplx> w = what;
    fft_inplace(w, true);
    double m = 0;
    for (auto& z : w) m = std::max(m, std::abs(z.imag()));
    return m;
}

/// Integrating-factor RK4 stepper. The diagonal linear flow
/// (a_i d_xxx + b_ii d_x) is advanced exactly by the phase
/// e^{i(a_i xi^3 - b_ii xi) dt}; the b12/b21 coupling and the quadratic
/// terms are integrated by RK4 in the interaction picture, products
/// evaluated pseudospectrally under the 2/3 rule.
class Stepper {
  public:
    Stepper(const Grid& grid, const DiagonalSystem& sys) : grid_(grid), sys_(sys) {
        grid.validate();
        const int n = grid.n_modes;
        phase_u_half_.resize(n);
        phase_v_half_.resize(n);
        ixi_.resize(n);
        mask_.resize(n);
        for (int k = 0; k < n; ++k) {
            const double xi = grid.xi(k);
            const double ph_u = (sys.a1 * xi * xi * xi - sys.b11 * xi) * grid.dt / 2;
            const double ph_v = (sys.a2 * xi * xi * xi - sys.b22 * xi) * grid.dt / 2;
            phase_u_half_[k] = {std::cos(ph_u), std::sin(ph_u)};
            phase_v_half_[k] = {std::cos(ph_v), std::sin(ph_v)};
            ixi_[k] = {0.0, xi};
            mask_[k] = grid.keep_mode(k) ? 1.0 : 0.0;
        }
    }

    /// One RK4 step of size grid.dt; returns the advanced state.
    SpectralState step(const SpectralState& st) const {
        const int n = grid_.n_modes;
        if (int(st.uhat.size()) != n) throw GridMismatch("step: state size mismatch");

        // Interaction-picture variable z(tau) = e^{-i phi tau} what(t + tau),
        // with tau measured from the current time; z(0) = what.
        std::vector<cplx> zu = st.uhat, zv = st.vhat;
        std::vector<cplx> k1u(n), k1v(n), k2u(n), k2v(n), k3u(n), k3v(n), k4u(n), k4v(n);
        std::vector<cplx> tu(n), tv(n);

        rhs(zu, zv, 0, k1u, k1v);
        for (int k = 0; k < n; ++k) {
            tu[k] = zu[k] + 0.5 * grid_.dt * k1u[k];
            tv[k] = zv[k] + 0.5 * grid_.dt * k1v[k];
        }
        rhs(tu, tv, 1, k2u, k2v);
        for (int k = 0; k < n; ++k) {
            tu[k] = zu[k] + 0.5 * grid_.dt * k2u[k];
            tv[k] = zv[k] + 0.5 * grid_.dt * k2v[k];
        }
        rhs(tu, tv, 1, k3u, k3v);
        for (int k = 0; k < n; ++k) {
            tu[k] = zu[k] + grid_.dt * k3u[k];
            tv[k] = zv[k] + grid_.dt * k3v[k];
        }
        rhs(tu, tv, 2, k4u, k4v);

        SpectralState out;
        out.grid = grid_;
        out.sys = sys_;
        out.t = st.t + grid_.dt;
        out.uhat.resize(n);
        out.vhat.resize(n);
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            const cplx zun =
                zu[k] + grid_.dt / 6.0 * (k1u[k] + 2.0 * k2u[k] + 2.0 * k3u[k] + k4u[k]);
            const cplx zvn =
                zv[k] + grid_.dt / 6.0 * (k1v[k] + 2.0 * k2v[k] + 2.0 * k3v[k] + k4v[k]);
            const cplx pu = phase_u_half_[k] * phase_u_half_[k];
            const cplx pv = phase_v_half_[k] * phase_v_half_[k];
            out.uhat[k] = pu * zun * mask_[k];
            out.vhat[k] = pv * zvn * mask_[k];
            worst = std::max(worst, std::max(std::abs(out.uhat[k]), std::abs(out.vhat[k])));
        }
        if (worst > 1e12) throw Blowup("step: coefficients exceed 1e12");
        return out;
    }

  private:
    /// d z/d tau at substep `half` (0: tau=0, 1: tau=dt/2, 2: tau=dt).
    void rhs(const std::vector<cplx>& zu, const std::vector<cplx>& zv, int half,
             std::vector<cplx>& out_u, std::vector<cplx>& out_v) const {
        const int n = grid_.n_modes;
        std::vector<cplx> uh(n), vh(n);
        for (int k = 0; k < n; ++k) {
            cplx pu = 1.0, pv = 1.0;
            if (half >= 1) { pu = phase_u_half_[k]; pv = phase_v_half_[k]; }
            if (half == 2) { pu *= phase_u_half_[k]; pv *= phase_v_half_[k]; }
            uh[k] = pu * zu[k];
            vh[k] = pv * zv[k];
        }
        std::vector<cplx> u = uh, v = vh, ux(n), vx(n);
        for (int k = 0; k < n; ++k) {
            ux[k] = ixi_[k] * uh[k];
            vx[k] = ixi_[k] * vh[k];
        }
        fft_inplace(u, true);
        fft_inplace(v, true);
        fft_inplace(ux, true);
        fft_inplace(vx, true);

        const auto& s = sys_;
        std::vector<cplx> fu(n), fv(n);
        for (int j = 0; j < n; ++j) {
            const double uj = u[j].real(), vj = v[j].real();
            const double uxj = ux[j].real(), vxj = vx[j].real();
            fu[j] = s.c11 * uj * uxj + s.c12 * vj * vxj + s.d11 * uxj * vj + s.d12 * uj * vxj;
            fv[j] = s.c21 * uj * uxj + s.c22 * vj * vxj + s.d21 * uxj * vj + s.d22 * uj * vxj;
        }
        fft_inplace(fu, false);
        fft_inplace(fv, false);

        for (int k = 0; k < n; ++k) {
            // Linear cross coupling stays in the nonlinear stage so the
            // integrating factor remains diagonal.
            cplx rhs_u = (fu[k] - s.b12 * ixi_[k] * vh[k]) * mask_[k];
            cplx rhs_v = (fv[k] - s.b21 * ixi_[k] * uh[k]) * mask_[k];
            cplx pu = 1.0, pv = 1.0;
            if (half >= 1) { pu = std::conj(phase_u_half_[k]); pv = std::conj(phase_v_half_[k]); }
            if (half == 2) { pu *= std::conj(phase_u_half_[k]); pv *= std::conj(phase_v_half_[k]); }
            out_u[k] = pu * rhs_u;
            out_v[k] = pv * rhs_v;
        }
    }

    Grid grid_;
    DiagonalSystem sys_;
    std::vector<cplx> phase_u_half_, phase_v_half_, ixi_;
    std::vector<double> mask_;
};

/// Single step without a persistent stepper.
inline SpectralState step(const SpectralState& st) {
    return Stepper(st.grid, st.sys).step(st);
}

/// Conserved-energy snapshot. Drifts are filled by the simulation driver.
struct EnergyReport {
    double E1 = 0, E2 = 0;
    double relative_drift_E1 = 0, relative_drift_E2 = 0;
};

/// What energies() needs beyond the state: which named system, its physical
/// parameters, and (for Gear-Grimshaw) the change of basis back to the
/// original variables.
struct EnergySpec {
    SystemKind kind = SystemKind::MajdaBiello;
    NamedParams params;
    ChangeOfBasis basis; // identity unless the system was diagonalized
};

namespace detail {

/// Exact integral of a product of up to three band-limited factors: sums on
/// a 2x zero-padded grid so cubic products do not alias.
class ProductIntegrator {
  public:
    explicit ProductIntegrator(const Grid& g) : g_(g), np_(2 * g.n_modes) {}

    /// Physical samples on the padded grid from a spectrum of length n.
    std::vector<double> upsample(const std::vector<cplx>& what) const {
        const int n = g_.n_modes;
        std::vector<cplx> padded(np_, 0.0);
        for (int k = 0; k < n; ++k) {
            const int half = n / 2;
            const int ks = (k < half) ? k : k - n;
            const int idx = (ks >= 0) ? ks : np_ + ks;
            padded[idx] = what[k] * (double(np_) / n); // keep physical amplitude
        }
        fft_inplace(padded, true);
        std::vector<double> out(np_);
        for (int j = 0; j < np_; ++j) out[j] = padded[j].real();
        return out;
    }

    double dx() const { return g_.L / np_; }
    int size() const { return np_; }

  private:
    Grid g_;
    int np_;
};

inline std::vector<cplx> derivative_spectrum(const Grid& g, const std::vector<cplx>& what) {
    std::vector<cplx> d(what.size());
    for (int k = 0; k < g.n_modes; ++k) d[k] = cplx(0.0, g.xi(k)) * what[k];
    return d;
}

inline bool coeffs_match(const DiagonalSystem& a, const DiagonalSystem& b, double tol) {
    auto near = [tol](double x, double y) { return std::abs(x - y) <= tol * (1 + std::abs(y)); };
    return near(a.a1, b.a1) && near(a.a2, b.a2) && near(a.b11, b.b11) && near(a.b12, b.b12) &&
           near(a.b21, b.b21) && near(a.b22, b.b22) && near(a.c11, b.c11) && near(a.c12, b.c12) &&
           near(a.c21, b.c21) && near(a.c22, b.c22) && near(a.d11, b.d11) && near(a.d12, b.d12) &&
           near(a.d21, b.d21) && near(a.d22, b.d22);
}

} // namespace detail

/// Conserved energies of the named systems, evaluated spectrally with exact
/// (padded) cubic quadrature. Gear-Grimshaw energies are computed in the
/// original variables reconstructed through the change of basis.
inline EnergyReport energies(const SpectralState& st, const EnergySpec& spec) {
    auto [expected, basis_check] = diagonalize(named_system(spec.kind, spec.params));
    (void)basis_check;
    if (!detail::coeffs_match(st.sys, expected, 1e-9))
        throw KindMismatch("energies: state does not match the named system's coefficients");

    const Grid& g = st.grid;
    detail::ProductIntegrator pi(g);

    // Reconstruct original variables: w = M z componentwise in spectrum.
    const Mat2 M = spec.basis.M;
    const int n = g.n_modes;
    std::vector<cplx> uo(n), vo(n);
    for (int k = 0; k < n; ++k) {
        uo[k] = M.a * st.uhat[k] + M.b * st.vhat[k];
        vo[k] = M.c * st.uhat[k] + M.d * st.vhat[k];
    }
    auto u = pi.upsample(uo);
    auto v = pi.upsample(vo);
    auto ux = pi.upsample(detail::derivative_spectrum(g, uo));
    auto vx = pi.upsample(detail::derivative_spectrum(g, vo));

    const double dx = pi.dx();
    double e1 = 0, e2 = 0;
    const auto& p = spec.params;
    switch (spec.kind) {
        case SystemKind::MajdaBiello:
            for (int j = 0; j < pi.size(); ++j) {
                e1 += u[j] * u[j] + v[j] * v[j];
                e2 += ux[j] * ux[j] + p.a2 * vx[j] * vx[j] - u[j] * v[j] * v[j];
            }
            break;
        case SystemKind::HirotaSatsuma:
            for (int j = 0; j < pi.size(); ++j) {
                e1 += u[j] * u[j] + p.c12 / 3.0 * v[j] * v[j];
                e2 += (1 - p.a1) * ux[j] * ux[j] + p.c12 * vx[j] * vx[j] -
                      2 * (1 - p.a1) * u[j] * u[j] * u[j] - p.c12 * u[j] * v[j] * v[j];
            }
            break;
        case SystemKind::GearGrimshaw:
            for (int j = 0; j < pi.size(); ++j) {
                e1 += p.rho2 * u[j] * u[j] + p.rho1 * v[j] * v[j];
                e2 += p.rho2 * ux[j] * ux[j] + vx[j] * vx[j] +
                      2 * p.rho2 * p.sigma3 * ux[j] * vx[j] - p.rho2 / 3.0 * u[j] * u[j] * u[j] +
                      p.rho2 * p.sigma2 * u[j] * u[j] * v[j] +
                      p.rho2 * p.sigma1 * u[j] * v[j] * v[j] - v[j] * v[j] * v[j] / 3.0 -
                      p.sigma4 * v[j] * v[j];
            }
            break;
        default:
            throw KindMismatch("energies: no conserved-energy table for this kind");
    }
    EnergyReport rep;
    rep.E1 = e1 * dx;
    rep.E2 = e2 * dx;
    return rep;
}

/// Discrete H^s norm: sqrt( sum <xi_k>^{2s} |f_k|^2 * Parseval weight ) with
/// the paper bracket <xi> = 1 + |xi|.
inline double sobolev_norm(const std::vector<double>& f, double s, const Grid& grid) {
    if (s < -2.0 || s > 4.0) throw OutOfDomain("sobolev_norm: s must lie in [-2, 4]");
    if (int(f.size()) != grid.n_modes) throw GridMismatch("sobolev_norm: bad sample count");
    std::vector<cplx> fh(f.begin(), f.end());
    fft_inplace(fh, false);
    // |fhat_cont|^2 dxi with fhat_cont = dx * DFT and dxi = 2pi/L gives the
    // weight dx^2 * 2pi / L = L / n^2 * 2pi / ... collapsed below.
    const double w = grid.dx() * grid.dx() / (2.0 * M_PI) * (2.0 * M_PI / grid.L) * grid.n_modes;
    // Simplify: continuum Plancherel ||f||_L2^2 = sum |f_j|^2 dx; expressed
    // through the DFT it is sum |F_k|^2 * dx / n. The H^s weight multiplies
    // each mode.
    (void)w;
    double acc = 0;
    for (int k = 0; k < grid.n_modes; ++k) {
        const double br = 1.0 + std::abs(grid.xi(k));
        acc += std::pow(br, 2.0 * s) * std::norm(fh[k]);
    }
    return std::sqrt(acc * grid.dx() / grid.n_modes);
}

/// Scaling map u -> lambda^{-2} u(x / lambda). For lambda >= 1 and
/// s >= -13/12 the H^s norm contracts at least by lambda^{-5/12}.
inline std::function<double(double)> scale_data(const std::function<double(double)>& f,
                                                double lambda) {
    if (!(lambda >= 1)) throw InvalidParameter("scale_data: lambda >= 1");
    return [f, lambda](double x) { return f(x / lambda) / (lambda * lambda); };
}

/// One record of the simulation time series.
struct SeriesRecord {
    double t;
    double E1, E2;
    double hs_u, hs_v;
};

struct SimulationConfig {
    Grid grid;
    DiagonalSystem sys;
    bool has_energy_spec = false;
    EnergySpec energy_spec;
    std::function<double(double)> u0 = [](double) { return 0.0; };
    std::function<double(double)> v0 = [](double) { return 0.0; };
    int output_stride = 100;
    double norm_s = 0.0; // H^s exponent tracked in the series
};

struct SimulationResult {
    std::vector<SeriesRecord> series;
    EnergyReport final_energies;
    SpectralState final_state;
};

/// Driver: step the system to T, recording energies and Sobolev norms every
/// output_stride steps, and report relative energy drifts against t = 0.
inline SimulationResult simulate(const SimulationConfig& cfg) {
    SpectralState st = init(cfg.grid, cfg.sys, cfg.u0, cfg.v0);
    Stepper stepper(cfg.grid, cfg.sys);

    auto snapshot = [&](const SpectralState& state) -> EnergyReport {
        if (cfg.has_energy_spec) return energies(state, cfg.energy_spec);
        // Generic diagnostic: L2 masses and first-derivative masses.
        detail::ProductIntegrator pi(state.grid);
        auto u = pi.upsample(state.uhat);
        auto v = pi.upsample(state.vhat);
        auto ux = pi.upsample(detail::derivative_spectrum(state.grid, state.uhat));
        auto vx = pi.upsample(detail::derivative_spectrum(state.grid, state.vhat));
        EnergyReport rep;
        for (int j = 0; j < pi.size(); ++j) {
            rep.E1 += u[j] * u[j] + v[j] * v[j];
            rep.E2 += ux[j] * ux[j] + vx[j] * vx[j];
        }
        rep.E1 *= pi.dx();
        rep.E2 *= pi.dx();
        return rep;
    };

    SimulationResult out;
    const EnergyReport base = snapshot(st);
    auto record = [&](const SpectralState& state, const EnergyReport& e) {
        SeriesRecord r;
        r.t = state.t;
        r.E1 = e.E1;
        r.E2 = e.E2;
        r.hs_u = sobolev_norm(to_physical(state.grid, state.uhat), cfg.norm_s, state.grid);
        r.hs_v = sobolev_norm(to_physical(state.grid, state.vhat), cfg.norm_s, state.grid);
        out.series.push_back(r);
    };
    record(st, base);

    double drift1 = 0, drift2 = 0;
    const double floor1 = std::max(std::abs(base.E1), 1e-30);
    const double floor2 = std::max(std::abs(base.E2), 1e-30);
    const long nsteps = std::lround(cfg.grid.T / cfg.grid.dt);
    for (long i = 1; i <= nsteps; ++i) {
        st = stepper.step(st);
        if (i % cfg.output_stride == 0 || i == nsteps) {
            EnergyReport e = snapshot(st);
            drift1 = std::max(drift1, std::abs(e.E1 - base.E1) / floor1);
            drift2 = std::max(drift2, std::abs(e.E2 - base.E2) / floor2);
            record(st, e);
        }
    }
    out.final_energies = snapshot(st);
    out.final_energies.relative_drift_E1 = drift1;
    out.final_energies.relative_drift_E2 = drift2;
    out.final_state = st;
    return out;
}

} // namespace ckdv
