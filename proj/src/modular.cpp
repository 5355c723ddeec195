#include "modular.hpp"

#include <utility>

namespace symcurve::detail {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    if (p_ == 2) return a;
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow(z, q);
    std::uint64_t t = pow(a, q);
    std::uint64_t r = pow(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

std::uint64_t PrimeField::reduce(const Integer& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
}

std::optional<std::uint64_t> PrimeField::reduce(const Rational& v) const {
    const std::uint64_t den = reduce(v.denominator());
    if (den == 0) return std::nullopt;
    return mul(reduce(v.numerator()), inv(den));
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    const PrimeField f(n);
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = f.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = f.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<FieldReduction> FieldReduction::make(std::uint64_t p,
                                                   const std::vector<std::uint64_t>& primes) {
    FieldReduction red(p);
    for (auto q : primes) {
        if (q % p == 0) return std::nullopt;
        auto root = red.f_.sqrt(q % p);
        if (!root) return std::nullopt;
        red.roots_[q] = *root;
    }
    return red;
}

std::optional<std::uint64_t> FieldReduction::reduce(const FieldElement& v) const {
    std::uint64_t acc = 0;
    for (const auto& term : v.terms()) {
        auto c = f_.reduce(term.coeff);
        if (!c) return std::nullopt;
        std::uint64_t basis = 1;
        std::uint64_t m = term.radicand;
        for (const auto& [q, root] : roots_) {
            if (m % q == 0) {
                basis = f_.mul(basis, root);
                m /= q;
            }
        }
        if (m != 1) return std::nullopt;
        acc = f_.add(acc, f_.mul(*c, basis));
    }
    return acc;
}

namespace {

void trim(std::vector<std::uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

int gcd_degree_mod(const PrimeField& f, std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const std::uint64_t inv_lead = f.inv(b.back());
        while (a.size() >= b.size()) {
            const std::uint64_t factor = f.mul(a.back(), inv_lead);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k)
                a[shift + k] = f.sub(a[shift + k], f.mul(factor, b[k]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace symcurve::detail
