#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qbmap {

using cplx = std::complex<double>;

// Neumaier-compensated accumulator. Addition order is fixed by the caller,
// which keeps reductions bit-stable across thread counts.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumCplx {
public:
    void add(const cplx& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

inline double factorial(int n) {
    if (n < 0 || n > 170) throw std::invalid_argument("factorial: out of range");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of trailing zero bits; valuation of 2 in |k|.
inline int dyadic_valuation(std::int64_t k) {
    if (k == 0) throw std::invalid_argument("dyadic_valuation: k = 0");
    std::uint64_t u = static_cast<std::uint64_t>(k < 0 ? -k : k);
    int v = 0;
    while ((u & 1u) == 0) { u >>= 1; ++v; }
    return v;
}

inline bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

inline int int_log2(std::int64_t n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("int_log2: not a power of two");
    int d = 0;
    while (n > 1) { n >>= 1; ++d; }
    return d;
}

// Pearson correlation of two equal-length samples.
inline double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("pearson_correlation: size mismatch");
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need at least two points");
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QBMAP_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Static contiguous split of [0, count). Each index is processed exactly once
// and outputs must not overlap, so results do not depend on the split.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t, std::size_t)>& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count < 2048) {
        body(0, count);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (count + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qbmap
