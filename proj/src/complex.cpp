#include "symcurve/complex.hpp"

namespace symcurve {

ComplexElement ComplexElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in complex field");
    const FieldElement m = modulus_squared().inverse();
    return {re * m, -(im * m)};
}

ComplexElement& ComplexElement::operator+=(const ComplexElement& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexElement& ComplexElement::operator-=(const ComplexElement& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexElement operator*(const ComplexElement& a, const ComplexElement& b) {
    if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
    if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexElement& ComplexElement::operator*=(const ComplexElement& o) { return *this = *this * o; }

ComplexElement& ComplexElement::operator*=(const FieldElement& s) {
    re *= s;
    im *= s;
    return *this;
}

std::string ComplexElement::to_string() const {
    auto wrap = [](const FieldElement& f) {
        return f.terms().size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
    };
    if (im.is_zero()) return re.to_string();
    const std::string imag = wrap(im) + "*i";
    if (re.is_zero()) return imag;
    if (im.terms().size() == 1 && im.terms()[0].coeff.sign() < 0)
        return re.to_string() + " - " + wrap(-im) + "*i";
    return re.to_string() + " + " + imag;
}

}  // namespace symcurve
