#pragma once

#include <vector>

#include "qbmap/polynomial.hpp"

namespace qbmap {

/// One-step Frobenius-Perron operator of the dyadic Bernoulli map acting on
/// polynomial densities: (U_B f)(q) = [f(q/2) + f((1+q)/2)] / 2.
PolynomialRep fp_bernoulli_apply(const PolynomialRep& f);

/// Adjoint action at a point: f(2q) for q < 1/2, f(2q-1) for q >= 1/2.
/// q must lie in [0,1).
double fp_bernoulli_adjoint_apply(const PolynomialRep& f, double q);

/// Grid version of the adjoint: sample n maps to sample (2n) mod N.
std::vector<double> fp_bernoulli_adjoint_apply(const std::vector<double>& f);

struct SpectralTerm {
    int alpha;
    PolynomialRep right_poly;     // B_alpha
    double left_coefficient;      // (B~_alpha | f)
};

/// Expansion of a density over Bernoulli polynomials; the alpha-term decays
/// as 2^(-alpha tau) under evolution.
struct ClassicalSpectralExpansion {
    double rho0 = 0.0;
    std::vector<SpectralTerm> terms;
    int truncation = 0;
    bool truncated = false;  // set when truncation < deg(f)

    PolynomialRep reassemble(int tau = 0) const;
};

/// Euler-Maclaurin form of the spectral representation at tau = 0.
/// Reassembly reproduces f exactly when K >= deg(f).
ClassicalSpectralExpansion euler_maclaurin_expand(const PolynomialRep& f, int K);

/// Evolve a polynomial density tau steps through the spectral representation.
PolynomialRep spectral_evolve_classical(const PolynomialRep& f, int tau, int K);

/// Real density sampled on the N x N unit-square grid, values[i*N + j] being
/// the value at (q_i, p_j) = (i/N, j/N). Used for the baker -> Bernoulli
/// projection checks only.
struct Density2D {
    int N = 0;
    std::vector<double> values;

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * N + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * N + j]; }
    static Density2D filled(int N, double v);
};

/// One Frobenius-Perron step of the baker map. Each step consumes one binary
/// digit of resolution, so the output lives on the N/2 grid: the q preimages
/// q/2 and (q+1)/2 of the coarse grid fall exactly on the fine grid, and the
/// p direction is contracted by cell averaging. Exact for densities sampled
/// from functions of q, and mass preserving. Requires N divisible by 4.
Density2D baker_fp_apply_2d(const Density2D& rho);

/// Marginal over p: (1/N) sum_j rho(q_i, p_j).
std::vector<double> project_to_bernoulli(const Density2D& rho);

}  // namespace qbmap
