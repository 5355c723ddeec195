#pragma once

// Arithmetic in Z/pZ for word-sized primes, used only to certify properness
// quickly. Not part of the public headers.

#include "symcurve/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace symcurve::detail {

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
    /// Square root of a, if a is a quadratic residue.
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

    /// Image of an integer / rational; nullopt when p divides the denominator.
    std::uint64_t reduce(const Integer& v) const;
    std::optional<std::uint64_t> reduce(const Rational& v) const;

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Ring map Z_(p)[sqrt(q1), ...] -> F_p fixed by a choice of sqrt(q) mod p
/// for every prime q in the radicand set.
class FieldReduction {
public:
    /// nullopt if some q is not a nonzero quadratic residue mod p.
    static std::optional<FieldReduction> make(std::uint64_t p, const std::vector<std::uint64_t>& primes);

    const PrimeField& field() const { return f_; }
    std::optional<std::uint64_t> reduce(const FieldElement& v) const;

private:
    explicit FieldReduction(std::uint64_t p) : f_(p) {}

    PrimeField f_;
    std::map<std::uint64_t, std::uint64_t> roots_;
};

/// Degree of the monic gcd of two polynomials over F_p (dense, low to high).
int gcd_degree_mod(const PrimeField& f, std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

}  // namespace symcurve::detail
