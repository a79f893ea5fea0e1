#include "qbmap/polynomial.hpp"

#include <cmath>
#include <stdexcept>

#include "qbmap/numerics.hpp"

namespace qbmap {

PolynomialRep::PolynomialRep(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_ = {0.0};
    trim();
}

void PolynomialRep::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double PolynomialRep::coeff(int a) const {
    if (a < 0) throw std::invalid_argument("coeff: negative power");
    if (a >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(a)];
}

double PolynomialRep::evaluate(double q) const {
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
}

PolynomialRep PolynomialRep::derivative() const {
    if (coeffs_.size() == 1) return PolynomialRep({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t a = 1; a < coeffs_.size(); ++a)
        d[a - 1] = coeffs_[a] * static_cast<double>(a);
    return PolynomialRep(std::move(d));
}

PolynomialRep PolynomialRep::antiderivative() const {
    std::vector<double> p(coeffs_.size() + 1, 0.0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        p[a + 1] = coeffs_[a] / static_cast<double>(a + 1);
    return PolynomialRep(std::move(p));
}

double PolynomialRep::integral01() const {
    KahanSum s;
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        s.add(coeffs_[a] / static_cast<double>(a + 1));
    return s.value();
}

PolynomialRep PolynomialRep::compose_affine(double scale, double shift) const {
    const int d = degree();
    std::vector<double> out(static_cast<std::size_t>(d) + 1, 0.0);
    std::vector<double> scale_pow(static_cast<std::size_t>(d) + 1, 1.0);
    for (int t = 1; t <= d; ++t) scale_pow[t] = scale_pow[t - 1] * scale;
    std::vector<double> row{1.0};  // Pascal row C(s, .)
    for (int s = 0; s <= d; ++s) {
        if (s > 0) {
            row.push_back(1.0);
            for (int t = s - 1; t >= 1; --t) row[t] += row[t - 1];
        }
        const double cs = coeffs_[static_cast<std::size_t>(s)];
        if (cs == 0.0) continue;
        // c_s (scale*q + shift)^s = c_s sum_t C(s,t) scale^t shift^(s-t) q^t
        double shift_pow = 1.0;
        for (int t = s; t >= 0; --t) {
            out[t] += cs * row[t] * scale_pow[t] * shift_pow;
            shift_pow *= shift;
        }
    }
    return PolynomialRep(std::move(out));
}

PolynomialRep PolynomialRep::operator+(const PolynomialRep& o) const {
    std::vector<double> r(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t a = 0; a < r.size(); ++a)
        r[a] = coeff(static_cast<int>(a)) + o.coeff(static_cast<int>(a));
    return PolynomialRep(std::move(r));
}

PolynomialRep PolynomialRep::operator-(const PolynomialRep& o) const {
    std::vector<double> r(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t a = 0; a < r.size(); ++a)
        r[a] = coeff(static_cast<int>(a)) - o.coeff(static_cast<int>(a));
    return PolynomialRep(std::move(r));
}

PolynomialRep PolynomialRep::operator*(double s) const {
    std::vector<double> r(coeffs_);
    for (auto& c : r) c *= s;
    return PolynomialRep(std::move(r));
}

double PolynomialRep::coeff_distance(const PolynomialRep& o) const {
    const int d = std::max(degree(), o.degree());
    double m = 0.0;
    for (int a = 0; a <= d; ++a) m = std::max(m, std::abs(coeff(a) - o.coeff(a)));
    return m;
}

PolynomialRep bernoulli_polynomial(int alpha) {
    if (alpha < 0) throw std::invalid_argument("bernoulli_polynomial: alpha must be >= 0");
    if (alpha > 30)
        throw std::invalid_argument("bernoulli_polynomial: alpha > 30 (coefficient growth guard)");
    PolynomialRep b = PolynomialRep::constant(1.0);
    for (int a = 1; a <= alpha; ++a) {
        PolynomialRep p = b.antiderivative() * static_cast<double>(a);
        b = p + PolynomialRep::constant(-p.integral01());
    }
    return b;
}

double left_functional(int alpha, const PolynomialRep& f) {
    if (alpha < 0) throw std::invalid_argument("left_functional: alpha must be >= 0");
    if (alpha == 0) return f.integral01();
    PolynomialRep g = f;
    for (int i = 0; i < alpha - 1; ++i) g = g.derivative();
    return (g.evaluate(1.0) - g.evaluate(0.0)) / factorial(alpha);
}

}  // namespace qbmap
