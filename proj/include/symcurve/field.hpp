#pragma once

#include "symcurve/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcurve {

/// Squarefree positive integer naming the basis element sqrt(key); 1 is the rational unit.
using Radicand = std::uint64_t;

class UnsupportedRadicand : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact real number in a multi-quadratic field Q(sqrt(p1), ..., sqrt(pk)).
///
/// Stored as a sparse sum  sum_j q_j * sqrt(m_j)  over distinct squarefree
/// m_j, sorted by m_j, zero coefficients dropped. Square roots of distinct
/// squarefree integers are linearly independent over Q, so this form is
/// canonical: two elements are equal iff their term lists are identical, and
/// zero is the empty list. No ordering is defined on irrational elements.
class FieldElement {
public:
    struct Term {
        Radicand radicand;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    FieldElement() = default;
    FieldElement(long v);  // NOLINT(google-explicit-constructor)
    FieldElement(Rational v);  // NOLINT(google-explicit-constructor)

    /// sqrt(n) for n >= 0, with square factors pulled out (sqrt(12) = 2*sqrt(3)).
    static FieldElement sqrt(std::uint64_t n);
    /// q * sqrt(m) for squarefree m.
    static FieldElement term(Rational q, Radicand m);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }
    /// Precondition: is_rational().
    Rational rational_value() const;
    /// Coefficient of sqrt(m); zero when absent.
    Rational coefficient(Radicand m) const;

    const std::vector<Term>& terms() const { return terms_; }

    /// Distinct primes occurring in any radicand, ascending.
    std::vector<std::uint64_t> primes() const;
    /// The field automorphism sending sqrt(p) to -sqrt(p).
    FieldElement conjugate_over(std::uint64_t p) const;
    /// Throws std::domain_error on zero.
    FieldElement inverse() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    /// Multiplies every coefficient by q.
    FieldElement scaled(const Rational& q) const;
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;

    /// Terms such as "1/2 - 3*sqrt(2) + sqrt(6)"; parses back with the curve grammar.
    std::string to_string() const;
    double to_double() const;

private:
    explicit FieldElement(std::vector<Term> terms) : terms_(std::move(terms)) {}

    std::vector<Term> terms_;
};

/// Splits n into (s, m) with n = s^2 * m and m squarefree.
std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t n);

}  // namespace symcurve
