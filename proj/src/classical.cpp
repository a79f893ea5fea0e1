#include "qbmap/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "qbmap/numerics.hpp"

namespace qbmap {

PolynomialRep fp_bernoulli_apply(const PolynomialRep& f) {
    PolynomialRep left = f.compose_affine(0.5, 0.0);
    PolynomialRep right = f.compose_affine(0.5, 0.5);
    return (left + right) * 0.5;
}

double fp_bernoulli_adjoint_apply(const PolynomialRep& f, double q) {
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("fp_bernoulli_adjoint_apply: q must lie in [0,1)");
    return q < 0.5 ? f.evaluate(2.0 * q) : f.evaluate(2.0 * q - 1.0);
}

std::vector<double> fp_bernoulli_adjoint_apply(const std::vector<double>& f) {
    const std::size_t N = f.size();
    std::vector<double> out(N);
    for (std::size_t n = 0; n < N; ++n) out[n] = f[(2 * n) % N];
    return out;
}

PolynomialRep ClassicalSpectralExpansion::reassemble(int tau) const {
    PolynomialRep r = PolynomialRep::constant(rho0);
    for (const auto& t : terms) {
        const double decay = std::pow(0.5, static_cast<double>(t.alpha) * tau);
        r = r + t.right_poly * (t.left_coefficient * decay);
    }
    return r;
}

ClassicalSpectralExpansion euler_maclaurin_expand(const PolynomialRep& f, int K) {
    if (K < 0) throw std::invalid_argument("euler_maclaurin_expand: K must be >= 0");
    ClassicalSpectralExpansion e;
    e.rho0 = f.integral01();
    e.truncation = K;
    e.truncated = K < f.degree();
    for (int alpha = 1; alpha <= K; ++alpha)
        e.terms.push_back({alpha, bernoulli_polynomial(alpha), left_functional(alpha, f)});
    return e;
}

PolynomialRep spectral_evolve_classical(const PolynomialRep& f, int tau, int K) {
    if (tau < 0) throw std::invalid_argument("spectral_evolve_classical: tau must be >= 0");
    return euler_maclaurin_expand(f, K).reassemble(tau);
}

Density2D Density2D::filled(int N, double v) {
    Density2D d;
    d.N = N;
    d.values.assign(static_cast<std::size_t>(N) * N, v);
    return d;
}

Density2D baker_fp_apply_2d(const Density2D& rho) {
    const int N = rho.N;
    if (N % 2 != 0) throw std::invalid_argument("baker_fp_apply_2d: N must be even");
    if (N < 4 || N % 4 != 0)
        throw std::invalid_argument("baker_fp_apply_2d: N must be a multiple of 4");
    const int M = N / 2;
    Density2D out;
    out.N = M;
    out.values.assign(static_cast<std::size_t>(M) * M, 0.0);
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            // preimage of coarse point (i/M, j/M): q/2 or (q+1)/2 is exactly
            // fine column i or i+M; the p interval covers four fine cells
            int col, p0;
            if (j < M / 2) {
                col = i;
                p0 = 4 * j;
            } else {
                col = i + M;
                p0 = 4 * j - N;
            }
            out.at(i, j) = 0.25 * (rho.at(col, p0) + rho.at(col, p0 + 1) +
                                   rho.at(col, p0 + 2) + rho.at(col, p0 + 3));
        }
    }
    return out;
}

std::vector<double> project_to_bernoulli(const Density2D& rho) {
    const int N = rho.N;
    std::vector<double> marginal(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        KahanSum s;
        for (int j = 0; j < N; ++j) s.add(rho.at(i, j));
        marginal[static_cast<std::size_t>(i)] = s.value() / N;
    }
    return marginal;
}

}  // namespace qbmap
