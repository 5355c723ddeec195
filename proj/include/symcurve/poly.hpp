#pragma once

#include "symcurve/complex.hpp"
#include "symcurve/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcurve {

/// Dense univariate polynomial in t; coeffs()[k] is the coefficient of t^k.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree -1 (standing in for -infinity).
template <typename Coeff>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(Coeff v) { return Poly(std::vector<Coeff>{std::move(v)}); }
    /// v * t^k
    static Poly monomial(Coeff v, std::size_t k) {
        std::vector<Coeff> c(k + 1);
        c[k] = std::move(v);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    /// Coefficient of t^k, zero beyond the degree.
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(); }
    const Coeff& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    template <typename Scalar>
    Poly scale(const Scalar& s) const {
        std::vector<Coeff> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v * s);
        return Poly(std::move(r));
    }

    /// p(v) by Horner's rule.
    template <typename Value>
    Value eval(const Value& v) const {
        Value acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using RealPoly = Poly<FieldElement>;
using ComplexPoly = Poly<ComplexElement>;

/// Rows 0..n of Pascal's triangle as exact integers.
class BinomialTable {
public:
    explicit BinomialTable(std::size_t n);
    /// C(k, i) for 0 <= i <= k <= n; zero when i > k.
    const Rational& operator()(std::size_t k, std::size_t i) const;
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<std::vector<Rational>> rows_;
    Rational zero_;
};

/// p(alpha*t + beta) by nested multiplication:
/// (((c_n)(alpha t + beta) + c_{n-1})(alpha t + beta) + ...) + c_0.
ComplexPoly compose_linear_horner(const ComplexPoly& p, const FieldElement& alpha,
                                  const FieldElement& beta);

/// p(alpha*t + beta) coefficientwise: the t^i coefficient is
/// alpha^i * sum_{k>=i} c_k * C(k,i) * beta^(k-i).
ComplexPoly compose_linear_binomial(const ComplexPoly& p, const FieldElement& alpha,
                                    const FieldElement& beta);

/// Default composition path (Horner).
inline ComplexPoly compose_linear(const ComplexPoly& p, const FieldElement& alpha,
                                  const FieldElement& beta) {
    return compose_linear_horner(p, alpha, beta);
}

RealPoly compose_linear(const RealPoly& p, const FieldElement& alpha, const FieldElement& beta);

/// Coefficientwise conjugation; t is real.
ComplexPoly conjugate_poly(const ComplexPoly& p);

ComplexPoly to_complex_poly(const RealPoly& re, const RealPoly& im);
RealPoly real_part(const ComplexPoly& p);
RealPoly imag_part(const ComplexPoly& p);

/// Quotient and remainder over the field. Throws std::domain_error if b is zero.
std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b);
/// Monic gcd over the field; gcd(0, 0) = 0.
RealPoly gcd(RealPoly a, RealPoly b);

/// deg_t gcd(x(t) - x(s), y(t) - y(s)) over the rational function field K(s).
/// Value 1 means the parametrization (x, y) is proper.
/// Precondition: at least one of x, y is nonconstant.
int bivariate_gcd_degree(const RealPoly& x, const RealPoly& y);

/// The same quantity computed purely by a primitive pseudo-remainder
/// sequence over K[s][t], with no modular shortcut.
int bivariate_gcd_degree_prs(const RealPoly& x, const RealPoly& y);

/// Human-readable form such as "3*t^2 - t + 1/2".
std::string to_string(const RealPoly& p, const std::string& var = "t");

}  // namespace symcurve
