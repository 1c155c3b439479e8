#pragma once

#include <complex>
#include <vector>

#include "ckdv/errors.hpp"

namespace ckdv {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Twiddle table for size n (first half of the unit circle), cached per size.
inline const std::vector<cplx>& twiddles(std::size_t n) {
    static thread_local std::vector<std::vector<cplx>> cache(32);
    std::size_t lg = 0;
    while ((std::size_t(1) << lg) < n) ++lg;
    auto& tw = cache[lg];
    if (tw.size() != n / 2) {
        tw.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = -2.0 * M_PI * double(k) / double(n);
            tw[k] = {std::cos(ang), std::sin(ang)};
        }
    }
    return tw;
}

} // namespace detail

/// In-place iterative radix-2 FFT. Forward uses e^{-i 2pi jk/n}; inverse
/// includes the 1/n factor. n must be a power of two.
inline void fft_inplace(cplx* a, std::size_t n, bool inverse) {
    if (!detail::is_pow2(n)) throw GridMismatch("fft: length must be a power of two");
    if (n <= 1) return;
    // Bit reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& tw = detail::twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx w = tw[k * step];
                if (inverse) w = std::conj(w);
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / double(n);
        for (std::size_t i = 0; i < n; ++i) a[i] *= inv;
    }
}

inline void fft_inplace(std::vector<cplx>& a, bool inverse) {
    fft_inplace(a.data(), a.size(), inverse);
}

inline std::vector<cplx> fft(std::vector<cplx> a, bool inverse = false) {
    fft_inplace(a, inverse);
    return a;
}

/// 2-D transform of row-major data (rows x cols), both dimensions pow2.
inline void fft2_inplace(std::vector<cplx>& a, std::size_t rows, std::size_t cols, bool inverse) {
    if (a.size() != rows * cols) throw GridMismatch("fft2: size mismatch");
    for (std::size_t r = 0; r < rows; ++r) fft_inplace(a.data() + r * cols, cols, inverse);
    std::vector<cplx> col(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) col[r] = a[r * cols + c];
        fft_inplace(col.data(), rows, inverse);
        for (std::size_t r = 0; r < rows; ++r) a[r * cols + c] = col[r];
    }
}

} // namespace ckdv
