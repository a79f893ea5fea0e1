#pragma once

#include <vector>

namespace qbmap {

/// Dense polynomial on [0,1] stored as coefficients c_0..c_d,
/// value at q being sum c_a q^a. All coefficient operations are closed-form.
class PolynomialRep {
public:
    PolynomialRep() : coeffs_{0.0} {}
    explicit PolynomialRep(std::vector<double> coeffs);
    static PolynomialRep constant(double c) { return PolynomialRep({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int a) const;

    double evaluate(double q) const;

    PolynomialRep derivative() const;
    // Antiderivative with zero constant term.
    PolynomialRep antiderivative() const;
    // Exact integral over [0,1].
    double integral01() const;
    // p(scale*q + shift), expanded to coefficients.
    PolynomialRep compose_affine(double scale, double shift) const;

    PolynomialRep operator+(const PolynomialRep& o) const;
    PolynomialRep operator-(const PolynomialRep& o) const;
    PolynomialRep operator*(double s) const;

    // Max coefficient-wise difference, padding degrees with zero.
    double coeff_distance(const PolynomialRep& o) const;

private:
    std::vector<double> coeffs_;
    void trim();
};

/// Classical Bernoulli polynomial B_alpha, built from the derivative /
/// zero-mean recurrence: B_0 = 1, dB_a/dq = a B_{a-1}, int_0^1 B_a = 0.
/// alpha is capped at 30 to keep coefficients well inside double range.
PolynomialRep bernoulli_polynomial(int alpha);

/// Left eigen-functional (B~_alpha | f): alpha = 0 gives int_0^1 f,
/// alpha >= 1 gives [f^(alpha-1)(1) - f^(alpha-1)(0)] / alpha!.
double left_functional(int alpha, const PolynomialRep& f);

}  // namespace qbmap
