#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qbmap/numerics.hpp"

namespace qbmap {

/// Quantized unit interval with N = 2^D points q_n = n/N and
/// hbar = 1/(2 pi N).
struct QuantumGrid {
    int D = 0;
    int N = 0;
    double hbar = 0.0;

    static QuantumGrid from_D(int D) {
        if (D < 1 || D > 24) throw std::invalid_argument("QuantumGrid: D must lie in [1,24]");
        QuantumGrid g;
        g.D = D;
        g.N = 1 << D;
        g.hbar = 1.0 / (2.0 * std::numbers::pi * g.N);
        return g;
    }
    static QuantumGrid from_N(int N) {
        if (!is_power_of_two(N)) throw std::invalid_argument("QuantumGrid: N must be a power of two");
        return from_D(int_log2(N));
    }

    double q(int n) const { return static_cast<double>(n) / N; }
    bool operator==(const QuantumGrid& o) const { return N == o.N; }
};

/// Unit-circle table tw[m] = exp(2 pi i m / N). Mode phases exp(2 pi i k n / N)
/// are looked up at the exactly reduced index (k n) mod N, which keeps large
/// k*n products out of the trig argument.
class Twiddle {
public:
    explicit Twiddle(int N) : N_(N), table_(static_cast<std::size_t>(N)) {
        for (int m = 0; m < N; ++m) {
            const double a = 2.0 * std::numbers::pi * m / N;
            table_[static_cast<std::size_t>(m)] = {std::cos(a), std::sin(a)};
        }
    }
    int N() const { return N_; }
    const cplx& operator[](std::int64_t m) const {
        std::int64_t r = m % N_;
        if (r < 0) r += N_;
        return table_[static_cast<std::size_t>(r)];
    }
    // exp(2 pi i k n / N) with exact integer reduction
    const cplx& phase(std::int64_t k, std::int64_t n) const { return (*this)[k * n]; }

private:
    int N_;
    std::vector<cplx> table_;
};

}  // namespace qbmap
