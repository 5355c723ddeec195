#pragma once

#include "symcurve/field.hpp"

#include <string>

namespace symcurve {

/// re + i*im over the exact real field.
struct ComplexElement {
    FieldElement re;
    FieldElement im;

    ComplexElement() = default;
    ComplexElement(FieldElement r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ComplexElement(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    ComplexElement(FieldElement r, FieldElement i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexElement i() { return {FieldElement(), FieldElement(1L)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ComplexElement conj() const { return {re, -im}; }
    /// |w|^2 = re^2 + im^2, never a square root.
    FieldElement modulus_squared() const { return re * re + im * im; }
    /// Throws std::domain_error on zero.
    ComplexElement inverse() const;

    ComplexElement operator-() const { return {-re, -im}; }
    ComplexElement& operator+=(const ComplexElement& o);
    ComplexElement& operator-=(const ComplexElement& o);
    ComplexElement& operator*=(const ComplexElement& o);
    ComplexElement& operator*=(const FieldElement& s);

    friend ComplexElement operator+(ComplexElement a, const ComplexElement& b) { return a += b; }
    friend ComplexElement operator-(ComplexElement a, const ComplexElement& b) { return a -= b; }
    friend ComplexElement operator*(const ComplexElement& a, const ComplexElement& b);
    friend ComplexElement operator*(ComplexElement a, const FieldElement& s) { return a *= s; }
    friend ComplexElement operator*(const FieldElement& s, ComplexElement a) { return a *= s; }

    friend bool operator==(const ComplexElement&, const ComplexElement&) = default;

    /// "a", "b*i" or "a + b*i" with each part rendered as a field element.
    std::string to_string() const;
};

}  // namespace symcurve
