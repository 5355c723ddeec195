#include "symcurve/fixtures.hpp"

#include "fixture_data.hpp"
#include "symcurve/parser.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace symcurve {

namespace {

FieldElement half_sqrt(unsigned d) { return FieldElement::sqrt(d).scaled(Rational(1, 2)); }

ComplexElement cbeta(long re_num, long re_den, long im_num = 0, long im_den = 1) {
    return {FieldElement(Rational(re_num, re_den)), FieldElement(Rational(im_num, im_den))};
}

FixtureCurve make(const std::string& id, int listed_degree, FixtureExpectation e,
                  std::optional<std::string> discrepancy = std::nullopt) {
    const auto src = fixture_source(id);
    if (!src) throw std::logic_error("missing fixture file " + id);
    return FixtureCurve{id, std::string(*src), listed_degree, std::move(e), std::move(discrepancy)};
}

FixtureExpectation central_yes(ComplexElement beta, std::string note = {}) {
    FixtureExpectation e;
    e.central = true;
    e.mirror = false;
    e.beta = std::move(beta);
    if (!note.empty()) e.shortcut_note = std::move(note);
    return e;
}

FixtureExpectation central_no(ComplexElement beta, std::string note = {}) {
    FixtureExpectation e;
    e.central = false;
    e.beta = std::move(beta);
    if (!note.empty()) e.shortcut_note = std::move(note);
    return e;
}

FixtureExpectation mirror(bool yes, ComplexElement beta, std::string note = {}) {
    FixtureExpectation e;
    e.mirror = yes;
    if (yes) e.central = false;
    e.beta = std::move(beta);
    if (!note.empty()) e.shortcut_note = std::move(note);
    return e;
}

std::vector<FixtureCurve> build_corpus() {
    std::vector<FixtureCurve> v;
    v.push_back(make("appendix-2", 83, central_yes(cbeta(-2, 1))));
    v.push_back(make("appendix-3", 3, central_yes(cbeta(0, 1), "cubic with c_2 = 0")));
    v.push_back(make("appendix-4", 7, central_yes(cbeta(0, 1), "c_{n-1} = 0 with n >= 4")));

    FixtureExpectation six = mirror(true, cbeta(-1, 1));
    six.axis = Line(FieldElement(1L), FieldElement(-1L), FieldElement());
    v.push_back(make("appendix-6", 21, std::move(six),
                     "listed axis y = x, but the listed equation i*z - conj(z) = 0 is x + y = 0, "
                     "and the curve is symmetric about x + y = 0"));

    v.push_back(make("appendix-7", 21, mirror(true, cbeta(0, 1))));
    v.push_back(make("appendix-8", 69, mirror(false, cbeta(0, 1), "c_{n-1} = 0 mirror shortcut")));
    v.push_back(make("appendix-9", 45, mirror(false, cbeta(0, 1), "c_{n-1} = 0 mirror shortcut")));
    v.push_back(make("appendix-10", 45, mirror(false, cbeta(-1, 3915))));
    v.push_back(make("appendix-11", 60, mirror(true, cbeta(0, 1), "r even, s odd: axis parallel to x")));
    v.push_back(make("appendix-12", 91, mirror(true, cbeta(-2, 1))));
    v.push_back(make("appendix-37", 20, central_no(cbeta(-1, 1, 1, 21), "beta not real"),
                     "listed degree 20; the (2t+1)^21 term gives degree 21"));
    v.push_back(make("appendix-38", 45, central_no(cbeta(-1, 3915, -1, 3915), "beta not real")));
    v.push_back(make("appendix-39", 35, central_yes(cbeta(-2, 1))));
    v.push_back(make("appendix-40", 77,
                     central_no(cbeta(0, 1), "beta = 0 but (-1, 0) does not solve the system")));
    v.push_back(make("appendix-41", 95, central_yes(cbeta(-2, 1))));
    v.push_back(make("appendix-42", 77, mirror(false, cbeta(-772, 385), "Q*(beta) not real")));
    v.push_back(make("appendix-43", 35, mirror(false, cbeta(-2, 1), "r, s odd and different")));
    v.push_back(make("appendix-44", 56, mirror(true, cbeta(-2, 1)),
                     "coefficient of u(t) in x(t) is garbled in the listing and read as sqrt(3)/2; "
                     "listed beta = -2, but c_55 = 0 in the printed curve so beta = 0"));
    return v;
}

// Bit-stable across standard libraries, unlike uniform_int_distribution.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    long between(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    long nonzero(long bound) {
        const long v = between(1, bound);
        return (rng_() & 1) ? v : -v;
    }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(rng_() % v.size())];
    }

private:
    std::mt19937_64 rng_;
};

Rational draw_scale(Draw& d) {
    static const std::vector<Rational> choices = {Rational(1),     Rational(-1),   Rational(2),
                                                  Rational(-2),    Rational(1, 2), Rational(3),
                                                  Rational(-1, 3), Rational(3, 2)};
    return d.pick(choices);
}

Rational draw_shift(Draw& d) {
    static const std::vector<Rational> choices = {Rational(1),  Rational(-1),   Rational(2),
                                                  Rational(-3), Rational(1, 2), Rational(-2, 3)};
    return d.pick(choices);
}

Motion draw_motion(Draw& d) {
    Motion m = d.pick(standard_rotations());
    m.w = ComplexElement(FieldElement(Rational(d.between(-6, 6), d.between(1, 2))),
                         FieldElement(Rational(d.between(-6, 6), d.between(1, 2))));
    return m;
}

struct Transport {
    Rational a;
    Rational b;
    Motion motion;
};

// Always consumes the same draws, so fixing one part leaves the others unchanged.
Transport draw_transport(Draw& d, const PlantOptions& opts) {
    Rational a = draw_scale(d);
    Rational b = draw_shift(d);
    Motion motion = draw_motion(d);
    if (opts.a) a = *opts.a;
    if (opts.b) b = *opts.b;
    if (opts.zero_subleading) b = Rational(0);
    if (opts.motion) motion = *opts.motion;
    return {a, b, motion};
}

RealPoly poly_from(const std::vector<long>& c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return RealPoly(std::move(v));
}

bool only_parity(const RealPoly& p, int parity) {
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (static_cast<int>(k % 2) != parity && !c[k].is_zero()) return false;
    return true;
}

Parametrization transport(const Parametrization& base, const Rational& a, const Rational& b,
                          const Motion& motion) {
    const RealPoly x = compose_linear(base.x, FieldElement(a), FieldElement(b));
    const RealPoly y = compose_linear(base.y, FieldElement(a), FieldElement(b));
    const ComplexElement& m = motion.m;
    Parametrization out;
    out.x = x.scale(m.re) - y.scale(m.im) + RealPoly::constant(motion.w.re);
    out.y = x.scale(m.im) + y.scale(m.re) + RealPoly::constant(motion.w.im);
    return out;
}

void check_plant_args(const Rational& a, const Motion& motion) {
    if (a.is_zero()) throw std::invalid_argument("substitution t -> a*t + b needs a != 0");
    if (motion.m.is_zero()) throw std::invalid_argument("motion must be invertible");
}

}  // namespace

Parametrization FixtureCurve::parametrization() const { return parse_curve(source); }

const std::vector<FixtureCurve>& appendix_corpus() {
    static const std::vector<FixtureCurve> corpus = build_corpus();
    return corpus;
}

const FixtureCurve& example_one() {
    static const FixtureCurve ex = [] {
        FixtureExpectation e = central_yes(cbeta(-1, 1));
        // The accompanying prose names (-1, 1); transporting the origin through
        // X = 1 + x + y, Y = -1 - x + y gives (1, -1), which is what the system yields.
        e.center = Point{FieldElement(1L), FieldElement(-1L)};
        return make("example-1", 23, std::move(e));
    }();
    return ex;
}

std::optional<std::string_view> fixture_source(std::string_view id) {
    for (const auto& [name, text] : detail::fixture_sources())
        if (name == id) return text;
    return std::nullopt;
}

Point Motion::apply(const Point& p) const {
    const ComplexElement z = m * p.as_complex() + w;
    return {z.re, z.im};
}

Motion Motion::rotation(FieldElement cos, FieldElement sin, Point translation) {
    return {ComplexElement(std::move(cos), std::move(sin)), translation.as_complex()};
}

std::vector<Motion> standard_rotations() {
    const auto q = [](long n, long d) { return FieldElement(Rational(n, d)); };
    return {
        Motion::identity(),
        Motion::rotation(q(3, 5), q(4, 5)),
        Motion::rotation(q(5, 13), q(12, 13)),
        Motion::rotation(q(8, 17), q(15, 17)),
        Motion::rotation(half_sqrt(2), half_sqrt(2)),
        Motion::rotation(half_sqrt(3), q(1, 2)),
    };
}

PlantedCurve plant_central(const Parametrization& base, const Rational& a, const Rational& b,
                           const Motion& motion) {
    check_plant_args(a, motion);
    if (!only_parity(base.x, 1) || !only_parity(base.y, 1))
        throw std::invalid_argument("central base must contain odd powers of t only");
    PlantedCurve out;
    out.curve = transport(base, a, b, motion);
    out.truth = {PlantedTruth::Kind::Central, motion.apply(Point{}), std::nullopt};
    out.base = base;
    out.a = a;
    out.b = b;
    out.motion = motion;
    return out;
}

PlantedCurve plant_mirror(const Parametrization& base, const Rational& a, const Rational& b,
                          const Motion& motion) {
    check_plant_args(a, motion);
    if (!only_parity(base.x, 0) || !only_parity(base.y, 1))
        throw std::invalid_argument("mirror base must be (even powers, odd powers)");
    // Image of y = 0: through w with direction m.
    const ComplexElement& m = motion.m;
    const ComplexElement& w = motion.w;
    Line axis(m.im, -m.re, m.re * w.im - m.im * w.re);
    PlantedCurve out;
    out.curve = transport(base, a, b, motion);
    out.truth = {PlantedTruth::Kind::Mirror, std::nullopt, std::move(axis)};
    out.base = base;
    out.a = a;
    out.b = b;
    out.motion = motion;
    return out;
}

Parametrization random_asymmetric(int degree, std::uint64_t seed) {
    if (degree < 2) throw std::invalid_argument("random_asymmetric needs degree >= 2");
    Draw d(seed);
    const int ydeg = degree - static_cast<int>(d.between(0, 1));
    std::vector<long> x(degree + 1), y(ydeg + 1);
    for (auto& c : x) c = d.between(-9, 9);
    for (auto& c : y) c = d.between(-9, 9);
    x[degree] = d.nonzero(9);
    y[ydeg] = d.nonzero(9);
    return {poly_from(x), poly_from(y)};
}

PlantedCurve random_planted_central(int degree, std::uint64_t seed, PlantOptions opts) {
    if (degree < 3 || degree % 2 == 0)
        throw std::invalid_argument("central symmetry needs an odd degree >= 3");
    Draw d(seed);
    const long bound = opts.coefficient_bound;
    while (true) {
        std::vector<long> x(degree + 1), y(degree + 1);
        for (int k = 1; k <= degree; k += 2) {
            x[k] = d.between(-bound, bound);
            y[k] = d.between(-bound, bound);
        }
        x[degree] = d.nonzero(bound);
        if (std::all_of(y.begin(), y.end(), [](long c) { return c == 0; })) y[1] = d.nonzero(bound);
        const auto [a, b, motion] = draw_transport(d, opts);
        PlantedCurve pc = plant_central({poly_from(x), poly_from(y)}, a, b, motion);
        if (classify(pc.curve).tag == CurveClass::Tag::Proper) return pc;
    }
}

PlantedCurve random_planted_mirror(int degree, std::uint64_t seed, PlantOptions opts) {
    if (degree < 2) throw std::invalid_argument("mirror symmetry needs degree >= 2");
    // x carries the even powers, y the odd ones.
    const int top_even = degree % 2 == 0 ? degree : degree - 1;
    const int top_odd = degree % 2 == 1 ? degree : degree - 1;
    const int skip = opts.zero_subleading ? degree - 1 : -1;
    const int even_lead = top_even == skip ? top_even - 2 : top_even;
    const int odd_lead = top_odd == skip ? top_odd - 2 : top_odd;
    if (even_lead < 2 || odd_lead < 1)
        throw std::invalid_argument("degree too small for a non-degenerate mirror base");
    Draw d(seed);
    const long bound = opts.coefficient_bound;
    while (true) {
        std::vector<long> x(degree + 1), y(degree + 1);
        for (int k = 0; k <= degree; ++k) {
            if (k == skip) continue;
            (k % 2 == 0 ? x : y)[k] = d.between(-bound, bound);
        }
        if (degree % 2 == 0) {
            x[degree] = d.nonzero(bound);
        } else {
            y[degree] = d.nonzero(bound);
        }
        if (x[even_lead] == 0) x[even_lead] = d.nonzero(bound);
        if (y[odd_lead] == 0) y[odd_lead] = d.nonzero(bound);
        const auto [a, b, motion] = draw_transport(d, opts);
        PlantedCurve pc = plant_mirror({poly_from(x), poly_from(y)}, a, b, motion);
        if (classify(pc.curve).tag == CurveClass::Tag::Proper) return pc;
    }
}

}  // namespace symcurve
