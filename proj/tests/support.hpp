#pragma once

// Seeded generators and independent oracles shared by the test binaries.
// The oracles work on real coordinates and evaluated points only, never on
// the complex coefficient form the detectors use.

#include "symcurve/curve.hpp"
#include "symcurve/fixtures.hpp"
#include "symcurve/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace symcurve::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long between(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (rng_() & 1) != 0; }

    Rational rational(long bound = 20) {
        long den = between(1, 12);
        return Rational(between(-bound, bound), den);
    }
    Rational nonzero_rational(long bound = 20) {
        Rational q;
        while (q.is_zero()) q = rational(bound);
        return q;
    }

    /// Element of Q(sqrt 2, sqrt 3, sqrt 5) with a random subset of the basis.
    FieldElement field(long bound = 20) {
        static const Radicand basis[] = {1, 2, 3, 5, 6, 10, 15, 30};
        FieldElement v;
        for (Radicand m : basis)
            if (between(0, 2) == 0) v += FieldElement::term(rational(bound), m);
        return v;
    }
    FieldElement nonzero_field(long bound = 20) {
        FieldElement v;
        while (v.is_zero()) v = field(bound);
        return v;
    }
    FieldElement small_field() {
        return coin() ? FieldElement(rational(5)) : FieldElement(rational(5)) + FieldElement::term(rational(3), 2);
    }

    RealPoly poly(int degree, long bound = 9) {
        std::vector<FieldElement> c(degree + 1);
        for (auto& v : c) v = FieldElement(between(-bound, bound));
        while (c[degree].is_zero()) c[degree] = FieldElement(between(-bound, bound));
        return RealPoly(std::move(c));
    }
    RealPoly field_poly(int degree) {
        std::vector<FieldElement> c(degree + 1);
        for (auto& v : c) v = small_field();
        while (c[degree].is_zero()) c[degree] = small_field();
        return RealPoly(std::move(c));
    }

    std::uint64_t next() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

inline Point eval_point(const Parametrization& p, const FieldElement& t) {
    return {p.x.eval(t), p.y.eval(t)};
}

/// Mirror image of q across A x + B y + C = 0, computed in real coordinates.
inline Point reflect(const Point& q, const Line& l) {
    const FieldElement k = (l.a() * q.x + l.b() * q.y + l.c()) / (l.a() * l.a() + l.b() * l.b());
    return {q.x - FieldElement(2L) * k * l.a(), q.y - FieldElement(2L) * k * l.b()};
}

/// For every sample t: reflecting the point at t lands on the point at beta - t.
/// A polynomial identity of degree n holds once it holds at n + 1 points.
inline bool sample_mirror_oracle(const Parametrization& p, const FieldElement& beta, const Line& axis) {
    const int n = std::max(p.x.degree(), p.y.degree());
    for (long t = 0; t <= n; ++t) {
        const FieldElement tt(Rational(t - n / 2, 3));
        if (!(reflect(eval_point(p, tt), axis) == eval_point(p, beta - tt))) return false;
    }
    return true;
}

/// For every sample t: 2 z0 - P(t) = P(beta - t).
inline bool sample_central_oracle(const Parametrization& p, const FieldElement& beta, const Point& c) {
    const int n = std::max(p.x.degree(), p.y.degree());
    for (long t = 0; t <= n; ++t) {
        const FieldElement tt(Rational(t - n / 2, 3));
        const Point a = eval_point(p, tt);
        const Point b = eval_point(p, beta - tt);
        if (!(FieldElement(2L) * c.x - a.x == b.x && FieldElement(2L) * c.y - a.y == b.y)) return false;
    }
    return true;
}

}  // namespace symcurve::testing
