#pragma once

// Golden curves and generators of curves with a planted, exactly known symmetry.

#include "symcurve/curve.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcurve {

/// Values as listed for the example, not as recomputed.
struct FixtureExpectation {
    std::optional<bool> central;
    std::optional<bool> mirror;
    /// Listed beta for the tested symmetry; complex where the listing gives a
    /// non-real candidate.
    std::optional<ComplexElement> beta;
    std::optional<Point> center;
    std::optional<Line> axis;
    std::optional<std::string> shortcut_note;
};

struct FixtureCurve {
    std::string id;
    std::string source;
    int listed_degree = 0;
    FixtureExpectation expected;
    /// Known mismatch between the listing and the curve as printed.
    std::optional<std::string> discrepancy;

    Parametrization parametrization() const;
};

/// The 18 listed examples, ids "appendix-2" ... "appendix-44".
const std::vector<FixtureCurve>& appendix_corpus();
/// The worked central example: center (1, -1), beta = -1.
const FixtureCurve& example_one();
/// Raw text of a shipped curve file by id, e.g. "appendix-6".
std::optional<std::string_view> fixture_source(std::string_view id);

/// Similarity z -> m z + w of the plane. Rotations use a unit m.
struct Motion {
    ComplexElement m = ComplexElement(1L);
    ComplexElement w;

    Point apply(const Point& p) const;
    static Motion identity() { return {}; }
    static Motion rotation(FieldElement cos, FieldElement sin, Point translation = {});
    static Motion translation(Point t) { return {ComplexElement(1L), t.as_complex()}; }
};

/// Rotations with exact cos/sin: identity, (3/5, 4/5), (5/13, 12/13),
/// (8/17, 15/17), (sqrt(2)/2, sqrt(2)/2), (sqrt(3)/2, 1/2).
std::vector<Motion> standard_rotations();

struct PlantedTruth {
    enum class Kind { Central, Mirror };
    Kind kind;
    std::optional<Point> center;
    std::optional<Line> axis;
};

struct PlantedCurve {
    Parametrization curve;
    PlantedTruth truth;
    Parametrization base;
    Rational a;
    Rational b;
    Motion motion;
};

/// base must have odd powers only in both components; truth center is
/// motion(origin). Throws std::invalid_argument on a = 0 or an even power.
PlantedCurve plant_central(const Parametrization& base, const Rational& a, const Rational& b,
                           const Motion& motion);

/// base must be (even powers only, odd powers only), symmetric about y = 0;
/// truth axis is motion(y = 0).
PlantedCurve plant_mirror(const Parametrization& base, const Rational& a, const Rational& b,
                          const Motion& motion);

/// Dense integer coefficients in [-9, 9], deg x = degree, fully determined by seed.
Parametrization random_asymmetric(int degree, std::uint64_t seed);

struct PlantOptions {
    /// Forces c_{n-1} = 0: no shift in the substitution and no t^(n-1) in the base.
    bool zero_subleading = false;
    /// Largest |coefficient| in the base.
    int coefficient_bound = 9;
    /// Fixed substitution t -> a*t + b and motion instead of random draws.
    std::optional<Rational> a;
    std::optional<Rational> b;
    std::optional<Motion> motion;
};

/// Random odd base of the given odd degree, random substitution and motion,
/// redrawn until the result is a proper curve.
PlantedCurve random_planted_central(int degree, std::uint64_t seed, PlantOptions opts = {});
/// As above for mirror symmetry; any degree >= 2.
PlantedCurve random_planted_mirror(int degree, std::uint64_t seed, PlantOptions opts = {});

}  // namespace symcurve
