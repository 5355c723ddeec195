#include "support.hpp"
#include "symcurve/detect.hpp"
#include "symcurve/fixtures.hpp"
#include "symcurve/parser.hpp"

#include <gtest/gtest.h>

#include <set>

namespace symcurve {
namespace {

FieldElement q(long n, long d = 1) { return FieldElement(Rational(n, d)); }
Parametrization curve_of(const char* x, const char* y) { return {parse_expression(x), parse_expression(y)}; }
const ComplexElement one_minus_i(q(1), q(-1));

TEST(Corpus, ShipsEighteenListedExamples) {
    const auto& corpus = appendix_corpus();
    EXPECT_EQ(corpus.size(), 18u);
    std::set<std::string> ids;
    for (const auto& f : corpus) {
        ids.insert(f.id);
        EXPECT_TRUE(fixture_source(f.id)) << f.id;
        EXPECT_TRUE(f.expected.central || f.expected.mirror) << f.id;
    }
    EXPECT_EQ(ids.size(), corpus.size());
    EXPECT_FALSE(fixture_source("appendix-5"));
}

TEST(Corpus, ListedDegreesMatchExceptNotedOnes) {
    for (const auto& f : appendix_corpus()) {
        const Parametrization p = f.parametrization();
        const int n = std::max(p.x.degree(), p.y.degree());
        if (f.discrepancy && f.id == "appendix-37") {
            EXPECT_EQ(n, 21);
            EXPECT_EQ(f.listed_degree, 20);
        } else {
            EXPECT_EQ(n, f.listed_degree) << f.id;
        }
    }
}

TEST(Regenerate, MirrorExampleSix) {
    const Parametrization base = curve_of("t^20 + t^18 + t^10 + 1", "t^21 - 3t^5 + t^3");
    Motion m;
    m.m = one_minus_i;
    const PlantedCurve pc = plant_mirror(base, Rational(2), Rational(1), m);
    EXPECT_EQ(pc.curve, parse_curve(*fixture_source("appendix-6")));
    EXPECT_EQ(*pc.truth.axis, Line(q(1), q(1), q(0)));
}

TEST(Regenerate, CentralExampleOne) {
    const Parametrization base = curve_of("2t^23 - t^13 + 2t^11", "2t^5 - t^3 + t");
    const Motion m{one_minus_i, one_minus_i};
    const PlantedCurve pc = plant_central(base, Rational(2), Rational(1), m);
    EXPECT_EQ(pc.curve, example_one().parametrization());
    EXPECT_EQ(*pc.truth.center, (Point{q(1), q(-1)}));
}

TEST(Plant, RotatedAndTranslatedAxes) {
    const Parametrization base = curve_of("t^2", "t^3");
    const FieldElement h = FieldElement::sqrt(2).scaled(Rational(1, 2));
    const PlantedCurve diag = plant_mirror(base, Rational(1), Rational(0), Motion::rotation(h, h));
    EXPECT_EQ(*diag.truth.axis, Line(q(1), q(-1), q(0)));
    const PlantedCurve up = plant_mirror(base, Rational(1), Rational(0), Motion::translation({q(0), q(7)}));
    EXPECT_EQ(*up.truth.axis, Line(q(0), q(1), q(-7)));
    for (const PlantedCurve* pc : {&diag, &up}) {
        const MirrorResult r = detect_mirror(to_complex(pc->curve));
        ASSERT_TRUE(r.symmetric);
        EXPECT_EQ(*r.axis, *pc->truth.axis);
    }
}

TEST(Plant, RejectsBadInput) {
    EXPECT_THROW(plant_central(curve_of("t^3", "t^2"), Rational(1), Rational(0), {}), std::invalid_argument);
    EXPECT_THROW(plant_central(curve_of("t^3", "t"), Rational(0), Rational(0), {}), std::invalid_argument);
    EXPECT_THROW(plant_mirror(curve_of("t^3", "t"), Rational(1), Rational(0), {}), std::invalid_argument);
    EXPECT_THROW(random_planted_central(8, 1), std::invalid_argument);
    EXPECT_THROW(random_planted_mirror(1, 1), std::invalid_argument);
}

TEST(Plant, StandardRotationsAreUnit) {
    for (const Motion& m : standard_rotations())
        EXPECT_EQ(m.m.re * m.m.re + m.m.im * m.m.im, q(1));
    EXPECT_EQ(standard_rotations().size(), 6u);
}

TEST(Plant, SeedsAreDeterministic) {
    EXPECT_EQ(random_planted_central(11, 42).curve, random_planted_central(11, 42).curve);
    EXPECT_EQ(random_planted_mirror(12, 42).curve, random_planted_mirror(12, 42).curve);
    EXPECT_EQ(random_asymmetric(9, 3), random_asymmetric(9, 3));
    EXPECT_NE(random_asymmetric(9, 3), random_asymmetric(9, 4));
}

TEST(PlantProperty, CentralRoundTrips) {
    for (int i = 0; i < 100; ++i) {
        const PlantedCurve pc = random_planted_central(3 + 2 * (i % 10), 100 + i);
        ASSERT_TRUE(testing::sample_central_oracle(pc.curve, -pc.b / pc.a * Rational(2),
                                                   *pc.truth.center))
            << i;
        const SymmetryReport r = detect_all(pc.curve);
        ASSERT_TRUE(r.central->symmetric) << i;
        ASSERT_FALSE(r.mirror->symmetric) << i;
        ASSERT_EQ(*r.central->center, *pc.truth.center) << i;
    }
}

TEST(PlantProperty, MirrorRoundTrips) {
    for (int i = 0; i < 100; ++i) {
        const PlantedCurve pc = random_planted_mirror(2 + i % 20, 300 + i);
        ASSERT_TRUE(testing::sample_mirror_oracle(pc.curve, -pc.b / pc.a * Rational(2), *pc.truth.axis))
            << i;
        const SymmetryReport r = detect_all(pc.curve);
        ASSERT_TRUE(r.mirror->symmetric) << i;
        ASSERT_FALSE(r.central->symmetric) << i;
        ASSERT_EQ(*r.mirror->axis, *pc.truth.axis) << i;
    }
}

}  // namespace
}  // namespace symcurve
