#pragma once

#include <string>
#include <vector>

#include "qbmap/grid.hpp"
#include "qbmap/numerics.hpp"

namespace qbmap {

/// Diagonal of a density matrix in position representation.
struct DensityDiagonal {
    QuantumGrid grid;
    std::vector<double> values;

    static DensityDiagonal uniform(const QuantumGrid& g);
    double trace() const;
};

/// Dense quantum baker unitary <q_n'|T|q_n> on the N = 2^D grid.
class BakerUnitary {
public:
    explicit BakerUnitary(const QuantumGrid& grid, int threads = 1);

    const QuantumGrid& grid() const { return grid_; }
    int N() const { return grid_.N; }
    const cplx& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * grid_.N + col];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    /// Transition probabilities |<q_n'|T|q_n>|^2, row-major.
    std::vector<double> transition_matrix() const;

    double max_unitarity_defect() const;  // max of ||TT+ - I||_max, ||T+T - I||_max

    void dump_binary(const std::string& path) const;

private:
    QuantumGrid grid_;
    std::vector<cplx> entries_;
};

inline BakerUnitary build_baker_unitary(const QuantumGrid& grid, int threads = 1) {
    return BakerUnitary(grid, threads);
}

/// Full one-step image T diag(rho) T+ as a dense complex matrix (row-major).
std::vector<cplx> baker_step_full(const BakerUnitary& T, const DensityDiagonal& rho,
                                  int threads = 1);

/// <q_n|p_m> = exp(2 pi i m n / N) / sqrt(N).
cplx position_momentum_overlap(const QuantumGrid& grid, int n, int m);

}  // namespace qbmap
