#include "symcurve/poly.hpp"

#include "modular.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symcurve {

BinomialTable::BinomialTable(std::size_t n) {
    rows_.reserve(n + 1);
    rows_.push_back({Rational(1)});
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& prev = rows_.back();
        std::vector<Rational> row(k + 1);
        row[0] = Rational(1);
        row[k] = Rational(1);
        for (std::size_t i = 1; i < k; ++i) row[i] = prev[i - 1] + prev[i];
        rows_.push_back(std::move(row));
    }
}

const Rational& BinomialTable::operator()(std::size_t k, std::size_t i) const {
    if (k >= rows_.size()) throw std::out_of_range("binomial table too small");
    return i <= k ? rows_[k][i] : zero_;
}

ComplexPoly compose_linear_horner(const ComplexPoly& p, const FieldElement& alpha,
                                  const FieldElement& beta) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    // acc holds the running polynomial, highest degree last.
    std::vector<ComplexElement> acc{c.back()};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        // acc <- acc * (alpha t + beta) + c_k
        std::vector<ComplexElement> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j] * alpha;
            if (!beta.is_zero()) next[j] += acc[j] * beta;
        }
        next[0] += c[k];
        acc = std::move(next);
    }
    return ComplexPoly(std::move(acc));
}

ComplexPoly compose_linear_binomial(const ComplexPoly& p, const FieldElement& alpha,
                                    const FieldElement& beta) {
    if (p.is_zero()) return {};
    const std::size_t n = static_cast<std::size_t>(p.degree());
    const BinomialTable binom(n);
    std::vector<FieldElement> beta_pow(n + 1), alpha_pow(n + 1);
    beta_pow[0] = FieldElement(1L);
    alpha_pow[0] = FieldElement(1L);
    for (std::size_t k = 1; k <= n; ++k) {
        beta_pow[k] = beta_pow[k - 1] * beta;
        alpha_pow[k] = alpha_pow[k - 1] * alpha;
    }
    std::vector<ComplexElement> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        ComplexElement sum;
        for (std::size_t k = i; k <= n; ++k) {
            const auto& ck = p.coeffs()[k];
            if (ck.is_zero() || beta_pow[k - i].is_zero()) continue;
            sum += ck * beta_pow[k - i].scaled(binom(k, i));
        }
        out[i] = sum * alpha_pow[i];
    }
    return ComplexPoly(std::move(out));
}

RealPoly compose_linear(const RealPoly& p, const FieldElement& alpha, const FieldElement& beta) {
    return real_part(compose_linear_horner(to_complex_poly(p, {}), alpha, beta));
}

ComplexPoly conjugate_poly(const ComplexPoly& p) {
    std::vector<ComplexElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.conj());
    return ComplexPoly(std::move(c));
}

ComplexPoly to_complex_poly(const RealPoly& re, const RealPoly& im) {
    const std::size_t n = std::max(re.coeffs().size(), im.coeffs().size());
    std::vector<ComplexElement> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = ComplexElement(re.coeff(k), im.coeff(k));
    return ComplexPoly(std::move(c));
}

RealPoly real_part(const ComplexPoly& p) {
    std::vector<FieldElement> c;
    for (const auto& v : p.coeffs()) c.push_back(v.re);
    return RealPoly(std::move(c));
}

RealPoly imag_part(const ComplexPoly& p) {
    std::vector<FieldElement> c;
    for (const auto& v : p.coeffs()) c.push_back(v.im);
    return RealPoly(std::move(c));
}

std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RealPoly(), a};
    const FieldElement inv_lead = b.leading().inverse();
    std::vector<FieldElement> rem = a.coeffs();
    std::vector<FieldElement> quot(a.coeffs().size() - b.coeffs().size() + 1);
    const auto& bc = b.coeffs();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const FieldElement f = rem[k + bc.size() - 1] * inv_lead;
        if (f.is_zero()) continue;
        quot[k] = f;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
    }
    rem.resize(bc.size() - 1);
    return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly gcd(RealPoly a, RealPoly b) {
    while (!b.is_zero()) {
        RealPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scale(a.leading().inverse());
}

namespace {

// Polynomial in t whose coefficients are polynomials in s.
using BiPoly = std::vector<RealPoly>;

void trim(BiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// f(t) - f(s)
BiPoly difference(const RealPoly& f) {
    BiPoly out(f.coeffs().size());
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) out[k] = RealPoly::constant(f.coeffs()[k]);
    RealPoly tail = f - RealPoly::constant(f.coeff(0));
    out[0] = -tail;
    trim(out);
    return out;
}

BiPoly primitive_part(BiPoly p) {
    RealPoly content;
    for (const auto& c : p) {
        content = gcd(content, c);
        if (content.degree() == 0) return p;
    }
    if (content.is_zero() || content.degree() <= 0) return p;
    for (auto& c : p) c = divmod(c, content).first;
    return p;
}

// lc(B)^k * A reduced modulo B in t, for some k; enough for gcd degrees.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
    const RealPoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const RealPoly la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> radicand_primes(const RealPoly& x, const RealPoly& y) {
    std::set<std::uint64_t> ps;
    for (const auto* p : {&x, &y})
        for (const auto& c : p->coeffs())
            for (auto q : c.primes()) ps.insert(q);
    return {ps.begin(), ps.end()};
}

// Reduces f(t) - f(s0) mod p; nullopt if some coefficient is not p-integral
// or the leading coefficient vanishes (the degree must be preserved).
std::optional<std::vector<std::uint64_t>> reduce_difference(const detail::FieldReduction& red,
                                                            const RealPoly& f,
                                                            const FieldElement& s0) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        auto v = red.reduce(c);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    auto at = red.reduce(f.eval(s0));
    if (!at) return std::nullopt;
    out[0] = red.field().sub(out[0], *at);
    if (out.back() == 0) return std::nullopt;
    return out;
}

}  // namespace

int bivariate_gcd_degree_prs(const RealPoly& x, const RealPoly& y) {
    if (x.is_constant() && y.is_constant())
        throw std::invalid_argument("bivariate_gcd_degree: both components constant");
    if (x.is_constant()) return y.degree();
    if (y.is_constant()) return x.degree();

    BiPoly a = primitive_part(difference(x));
    BiPoly b = primitive_part(difference(y));
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        BiPoly r = pseudo_remainder(a, b);
        if (r.empty()) return static_cast<int>(b.size()) - 1;
        if (r.size() == 1) return 0;
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
}

int bivariate_gcd_degree(const RealPoly& x, const RealPoly& y) {
    if (x.is_constant() && y.is_constant())
        throw std::invalid_argument("bivariate_gcd_degree: both components constant");
    if (x.is_constant()) return y.degree();
    if (y.is_constant()) return x.degree();

    // t - s always divides both differences, so the degree is at least 1.
    // Specialising s := s0 and reducing mod p (degrees preserved) can only
    // enlarge the gcd, so a modular gcd of degree 1 certifies the answer 1.
    const auto primes = radicand_primes(x, y);
    std::uint64_t candidate = (1ULL << 62) - 57;
    int attempts = 0;
    for (long s0num = 2; attempts < 6; s0num += 3) {
        while (!detail::is_prime_u64(candidate)) candidate -= 2;
        const std::uint64_t p = candidate;
        candidate -= 2;
        auto red = detail::FieldReduction::make(p, primes);
        if (!red) continue;
        ++attempts;
        const FieldElement s0(Rational(s0num, 7 + attempts));
        auto xr = reduce_difference(*red, x, s0);
        auto yr = reduce_difference(*red, y, s0);
        if (!xr || !yr) continue;
        if (detail::gcd_degree_mod(red->field(), std::move(*xr), std::move(*yr)) == 1) return 1;
    }
    return bivariate_gcd_degree_prs(x, y);
}

std::string to_string(const RealPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const auto& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (c.terms().size() == 1) {
            negative = c.terms()[0].coeff.sign() < 0;
            body = (negative ? -c : c).to_string();
        } else {
            body = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool unit = body == "1";
        if (k == 0) {
            os << body;
        } else {
            if (!unit) os << body << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace symcurve
