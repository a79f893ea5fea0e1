#include "qbmap/baker.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace qbmap {

DensityDiagonal DensityDiagonal::uniform(const QuantumGrid& g) {
    return {g, std::vector<double>(static_cast<std::size_t>(g.N), 1.0 / g.N)};
}

double DensityDiagonal::trace() const {
    KahanSum s;
    for (double v : values) s.add(v);
    return s.value();
}

BakerUnitary::BakerUnitary(const QuantumGrid& grid, int threads) : grid_(grid) {
    const int N = grid.N;
    if (N > (1 << 12))
        throw std::invalid_argument(
            "BakerUnitary: N > 4096 on the dense path; use the analytic evolver instead");
    entries_.assign(static_cast<std::size_t>(N) * N, cplx{0.0, 0.0});
    const Twiddle tw(N);
    const double amp = std::numbers::sqrt2 / N;
    // Closed form of the geometric m-sum over half the momentum range.
    // With Delta = n' - 2n and r = exp(2 pi i Delta / N):
    //   Delta = 0 (mod N) : N/2
    //   Delta even        : 0
    //   Delta odd         : 2 r^a / (1 - r), a = 0 for n < N/2, a = N/2 otherwise
    parallel_for(static_cast<std::size_t>(N), threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t row = lo; row < hi; ++row) {
            const int np = static_cast<int>(row);
            for (int n = 0; n < N; ++n) {
                const std::int64_t delta = static_cast<std::int64_t>(np) - 2 * n;
                cplx sum;
                if (((delta % N) + N) % N == 0) {
                    sum = cplx{N / 2.0, 0.0};
                } else if (delta % 2 == 0) {
                    continue;  // entry stays zero
                } else {
                    const cplx r = tw[delta];
                    sum = 2.0 / (1.0 - r);
                    if (n >= N / 2) sum = -sum;  // r^(N/2) = -1 for odd Delta
                }
                entries_[row * N + n] = amp * sum;
            }
        }
    });
}

std::vector<double> BakerUnitary::transition_matrix() const {
    std::vector<double> p(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) p[i] = std::norm(entries_[i]);
    return p;
}

double BakerUnitary::max_unitarity_defect() const {
    const int N = grid_.N;
    double worst = 0.0;
    // TT+ and T+T against identity
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                KahanSumCplx acc;
                for (int k = 0; k < N; ++k) {
                    const cplx a = pass == 0 ? at(i, k) : std::conj(at(k, i));
                    const cplx b = pass == 0 ? std::conj(at(j, k)) : at(k, j);
                    acc.add(a * b);
                }
                cplx v = acc.value();
                if (i == j) v -= 1.0;
                worst = std::max(worst, std::abs(v));
            }
        }
    }
    return worst;
}

void BakerUnitary::dump_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("dump_binary: cannot open " + path);
    char header[16] = {};
    std::memcpy(header, "QBKR", 4);
    const std::uint32_t n = static_cast<std::uint32_t>(grid_.N);
    std::memcpy(header + 4, &n, sizeof(n));
    out.write(header, sizeof(header));
    for (const cplx& z : entries_) {
        const double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
}

std::vector<cplx> baker_step_full(const BakerUnitary& T, const DensityDiagonal& rho,
                                  int threads) {
    const int N = T.N();
    if (rho.grid.N != N || static_cast<int>(rho.values.size()) != N)
        throw std::invalid_argument("baker_step_full: dimension mismatch");
    std::vector<cplx> out(static_cast<std::size_t>(N) * N);
    parallel_for(static_cast<std::size_t>(N), threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t row = lo; row < hi; ++row) {
            const int np = static_cast<int>(row);
            for (int mp = 0; mp < N; ++mp) {
                KahanSumCplx acc;
                for (int n = 0; n < N; ++n)
                    acc.add(T.at(np, n) * rho.values[static_cast<std::size_t>(n)] *
                            std::conj(T.at(mp, n)));
                out[row * N + mp] = acc.value();
            }
        }
    });
    return out;
}

cplx position_momentum_overlap(const QuantumGrid& grid, int n, int m) {
    const int N = grid.N;
    if (n < 0 || n >= N || m < 0 || m >= N)
        throw std::out_of_range("position_momentum_overlap: index out of range");
    const std::int64_t r = (static_cast<std::int64_t>(m) * n) % N;
    const double a = 2.0 * std::numbers::pi * r / N;
    return cplx{std::cos(a), std::sin(a)} / std::sqrt(static_cast<double>(N));
}

}  // namespace qbmap
