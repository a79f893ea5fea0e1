#pragma once

#include <stdexcept>
#include <vector>

#include "qbmap/grid.hpp"
#include "qbmap/numerics.hpp"

namespace qbmap {

/// In-place radix-2 transform, power-of-two lengths only. sign = -1 gives the
/// unscaled forward DFT sum_n x[n] e^{-2 pi i m n / N}; sign = +1 the unscaled
/// inverse. Butterfly order is fixed and single-threaded, so results are
/// reproducible bit-for-bit.
inline void fft_pow2(std::vector<cplx>& x, int sign) {
    const std::size_t N = x.size();
    if (!is_power_of_two(static_cast<std::int64_t>(N)))
        throw std::invalid_argument("fft_pow2: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < N; ++i) {
        std::size_t bit = N >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const Twiddle tw(static_cast<int>(N));
    for (std::size_t len = 2; len <= N; len <<= 1) {
        const std::size_t stride = N / len;
        for (std::size_t blk = 0; blk < N; blk += len) {
            for (std::size_t o = 0; o < len / 2; ++o) {
                cplx w = tw[static_cast<std::int64_t>(o * stride)];
                if (sign < 0) w = std::conj(w);
                const cplx u = x[blk + o];
                const cplx v = x[blk + o + len / 2] * w;
                x[blk + o] = u + v;
                x[blk + o + len / 2] = u - v;
            }
        }
    }
}

/// Mode coefficients c[m] = (1/N) sum_n v[n] e^{-2 pi i m n / N}; bin m > N/2
/// carries frequency m - N, bin N/2 the Nyquist mode k = -N/2.
inline std::vector<cplx> mode_analysis(const std::vector<cplx>& v) {
    std::vector<cplx> c(v);
    fft_pow2(c, -1);
    const double inv = 1.0 / static_cast<double>(c.size());
    for (auto& z : c) z *= inv;
    return c;
}

/// Synthesis v[n] = sum_m c[m] e^{+2 pi i m n / N}.
inline std::vector<cplx> mode_synthesis(const std::vector<cplx>& c) {
    std::vector<cplx> v(c);
    fft_pow2(v, +1);
    return v;
}

}  // namespace qbmap
