#include "symcurve/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace symcurve {

namespace {

constexpr std::uint64_t kMaxRadicand = 1'000'000'000'000ULL;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Sorts by radicand, merges duplicates, drops zeros.
std::vector<FieldElement::Term> normalize(std::vector<FieldElement::Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.radicand < b.radicand; });
    std::vector<FieldElement::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().radicand == t.radicand) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const auto& t) { return t.coeff.is_zero(); });
    return out;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t n) {
    if (n > kMaxRadicand)
        throw UnsupportedRadicand("radicand " + std::to_string(n) + " exceeds the supported bound");
    std::uint64_t square = 1;
    std::uint64_t free = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 == 1) free *= p;
    }
    free *= n;
    return {square, free};
}

FieldElement::FieldElement(long v) : FieldElement(Rational(v)) {}

FieldElement::FieldElement(Rational v) {
    if (!v.is_zero()) terms_.push_back({1, std::move(v)});
}

FieldElement FieldElement::sqrt(std::uint64_t n) {
    if (n == 0) return {};
    auto [square, free] = squarefree_decompose(n);
    return term(Rational(static_cast<long>(square)), free);
}

FieldElement FieldElement::term(Rational q, Radicand m) {
    if (m == 0) throw UnsupportedRadicand("radicand must be positive");
    if (q.is_zero()) return {};
    return FieldElement(std::vector<Term>{{m, std::move(q)}});
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw std::logic_error("field element is irrational: " + to_string());
    return terms_.empty() ? Rational() : terms_[0].coeff;
}

Rational FieldElement::coefficient(Radicand m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Radicand k) { return t.radicand < k; });
    return (it != terms_.end() && it->radicand == m) ? it->coeff : Rational();
}

std::vector<std::uint64_t> FieldElement::primes() const {
    std::set<std::uint64_t> ps;
    for (const auto& t : terms_)
        for (auto p : prime_factors(t.radicand)) ps.insert(p);
    return {ps.begin(), ps.end()};
}

FieldElement FieldElement::conjugate_over(std::uint64_t p) const {
    FieldElement r = *this;
    for (auto& t : r.terms_)
        if (t.radicand % p == 0) t.coeff = -t.coeff;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in field");
    if (is_rational()) return FieldElement(Rational(1) / terms_[0].coeff);
    // Multiply by the conjugate over one prime at a time; each step removes
    // that prime from every radicand of the running norm.
    FieldElement numerator(1L);
    FieldElement norm = *this;
    for (auto p : primes()) {
        FieldElement c = norm.conjugate_over(p);
        numerator *= c;
        norm *= c;
    }
    return numerator.scaled(Rational(1) / norm.rational_value());
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].radicand == o.terms_[0].radicand) {
        terms_[0].coeff += o.terms_[0].coeff;
        if (terms_[0].coeff.is_zero()) terms_.clear();
        return *this;
    }
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    terms_ = normalize(std::move(merged));
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement FieldElement::scaled(const Rational& q) const {
    if (q.is_zero()) return {};
    FieldElement r = *this;
    for (auto& t : r.terms_) t.coeff *= q;
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].radicand == 1)
        return FieldElement(std::vector<FieldElement::Term>{
            {b.terms_[0].radicand, a.terms_[0].coeff * b.terms_[0].coeff}});
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && b.terms_[0].radicand == 1)
        return FieldElement(std::vector<FieldElement::Term>{
            {a.terms_[0].radicand, a.terms_[0].coeff * b.terms_[0].coeff}});

    std::vector<FieldElement::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            // sqrt(m1) * sqrt(m2) = g * sqrt((m1/g) * (m2/g)), g = gcd(m1, m2)
            const std::uint64_t g = std::gcd(x.radicand, y.radicand);
            const unsigned __int128 key =
                static_cast<unsigned __int128>(x.radicand / g) * (y.radicand / g);
            if (key > kMaxRadicand * kMaxRadicand)
                throw UnsupportedRadicand("radicand product overflow");
            out.push_back({static_cast<Radicand>(key),
                           x.coeff * y.coeff * Rational(static_cast<long>(g))});
        }
    }
    return FieldElement(normalize(std::move(out)));
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

std::string FieldElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (t.radicand == 1) {
            os << c.to_string();
        } else if (c == Rational(1)) {
            os << "sqrt(" << t.radicand << ")";
        } else if (c == Rational(-1)) {
            os << "-sqrt(" << t.radicand << ")";
        } else {
            os << c.to_string() << "*sqrt(" << t.radicand << ")";
        }
        first = false;
    }
    return os.str();
}

double FieldElement::to_double() const {
    double v = 0.0;
    for (const auto& t : terms_)
        v += t.coeff.to_double() * std::sqrt(static_cast<double>(t.radicand));
    return v;
}

}  // namespace symcurve
