#include "symcurve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace symcurve {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        pos = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw std::invalid_argument("malformed rational literal: " + s);
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("malformed rational literal: " + s);
        return Integer(s.substr(from, to - from));
    };

    Rational r;
    if (auto slash = s.find('/', pos); slash != std::string::npos) {
        r = Rational(digits(pos, slash), digits(slash + 1, s.size()));
    } else if (auto dot = s.find('.', pos); dot != std::string::npos) {
        Integer whole = dot == pos ? Integer(0) : digits(pos, dot);
        Integer frac = digits(dot + 1, s.size());
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
        r = Rational(whole * scale + frac, scale);
    } else {
        r = Rational(digits(pos, s.size()));
    }
    return negative ? -r : r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const { return v_.get_str(); }

}  // namespace symcurve
