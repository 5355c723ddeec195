#include "symcurve/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace symcurve {

Line::Line(FieldElement a, FieldElement b, FieldElement c) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("line with A = B = 0");
    const FieldElement lead_inv = (a.is_zero() ? b : a).inverse();
    a_ = a * lead_inv;
    b_ = b * lead_inv;
    c_ = c * lead_inv;
    if (a_.is_rational() && b_.is_rational() && c_.is_rational()) {
        Integer den = 1;
        for (const auto* v : {&a_, &b_, &c_}) {
            Integer d = v->rational_value().denominator();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        Integer num = 0;
        for (const auto* v : {&a_, &b_, &c_}) {
            Integer n = (v->rational_value() * Rational(den)).numerator();
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
        const Rational factor(den, num);
        a_ = a_.scaled(factor);
        b_ = b_.scaled(factor);
        c_ = c_.scaled(factor);
    }
}

Point Line::base_point() const {
    if (!b_.is_zero()) return {FieldElement(), -(c_ / b_)};
    return {-(c_ / a_), FieldElement()};
}

std::string Line::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const FieldElement& v, const char* var) {
        if (v.is_zero()) return;
        std::string body;
        bool negative = false;
        if (v.terms().size() == 1) {
            negative = v.terms()[0].coeff.sign() < 0;
            body = (negative ? -v : v).to_string();
        } else {
            body = "(" + v.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (*var == '\0') {
            os << body;
        } else {
            if (body != "1") os << body << "*";
            os << var;
        }
        first = false;
    };
    emit(a_, "x");
    emit(b_, "y");
    emit(c_, "");
    os << " = 0";
    return os.str();
}

}  // namespace symcurve
