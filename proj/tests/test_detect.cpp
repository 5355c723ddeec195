#include "support.hpp"
#include "symcurve/detect.hpp"
#include "symcurve/parser.hpp"

#include <gtest/gtest.h>

namespace symcurve {
namespace {

Parametrization curve_of(const char* x, const char* y) { return {parse_expression(x), parse_expression(y)}; }

TEST(DetectAll, NeverBothSymmetries) {
    for (const FixtureCurve& f : appendix_corpus()) {
        const SymmetryReport r = detect_all(f.parametrization());
        ASSERT_EQ(r.curve_class.tag, CurveClass::Tag::Proper) << f.id;
        EXPECT_FALSE(r.central->symmetric && r.mirror->symmetric) << f.id;
    }
    for (int i = 0; i < 150; ++i) {
        const Parametrization p = random_asymmetric(2 + i % 25, 60 + i);
        if (classify(p).tag != CurveClass::Tag::Proper) continue;
        const SymmetryReport r = detect_all(p);
        EXPECT_FALSE(r.central->symmetric && r.mirror->symmetric) << i;
    }
}

TEST(DetectAll, VerdictsMatchListing) {
    for (const FixtureCurve& f : appendix_corpus()) {
        const SymmetryReport r = detect_all(f.parametrization());
        if (f.expected.central) EXPECT_EQ(r.central->symmetric, *f.expected.central) << f.id;
        if (f.expected.mirror) EXPECT_EQ(r.mirror->symmetric, *f.expected.mirror) << f.id;
        EXPECT_EQ(r.oracle_verified, r.central->symmetric || r.mirror->symmetric) << f.id;
    }
}

TEST(DetectAll, Deterministic) {
    const Parametrization p = parse_curve(*fixture_source("appendix-12"));
    const SymmetryReport a = detect_all(p);
    const SymmetryReport b = detect_all(p);
    EXPECT_EQ(*a.mirror->axis, *b.mirror->axis);
    EXPECT_EQ(a.notes, b.notes);
}

TEST(DetectAll, DegenerateInputsShortCircuit) {
    const SymmetryReport point = detect_all(curve_of("3", "-1"));
    EXPECT_EQ(point.curve_class.tag, CurveClass::Tag::Point);
    EXPECT_FALSE(point.central);
    EXPECT_FALSE(point.mirror);
    EXPECT_FALSE(point.notes.empty());

    const SymmetryReport line = detect_all(curve_of("t^3 + t", "2t^3 + 2t + 1"));
    EXPECT_EQ(line.curve_class.tag, CurveClass::Tag::Line);
    EXPECT_FALSE(line.central);

    const SymmetryReport improper = detect_all(curve_of("t^2", "t^4 + t^2"));
    EXPECT_EQ(improper.curve_class.tag, CurveClass::Tag::Improper);
    EXPECT_EQ(improper.curve_class.gcd_degree, 2);
    EXPECT_FALSE(improper.mirror);
}

TEST(DetectAll, DegreesReported) {
    const SymmetryReport r = detect_all(curve_of("t^4 + t", "t^3"));
    EXPECT_EQ(r.degrees, (Degrees{4, 3, 4}));
}

TEST(Oracle, PerturbedTruthIsRejected) {
    for (int i = 0; i < 30; ++i) {
        const PlantedCurve c = random_planted_central(3 + 2 * (i % 8), 4000 + i);
        const ComplexCurve cc = to_complex(c.curve);
        const FieldElement beta = -c.b / c.a * Rational(2);
        ASSERT_TRUE(oracle_check_central(cc, beta, *c.truth.center));
        Point off = *c.truth.center;
        off.y += FieldElement(Rational(1, 1000));
        ASSERT_FALSE(oracle_check_central(cc, beta, off));
        ASSERT_FALSE(oracle_check_central(cc, beta + FieldElement(Rational(1, 1000)), *c.truth.center));

        const PlantedCurve m = random_planted_mirror(2 + i % 15, 5000 + i);
        const ComplexCurve mc = to_complex(m.curve);
        const FieldElement mb = -m.b / m.a * Rational(2);
        const Line& ax = *m.truth.axis;
        ASSERT_TRUE(oracle_check_mirror(mc, mb, ax));
        ASSERT_FALSE(oracle_check_mirror(mc, mb, Line(ax.a(), ax.b(), ax.c() + FieldElement(Rational(1, 1000)))));
        ASSERT_FALSE(oracle_check_mirror(mc, mb, Line(ax.a() + FieldElement(Rational(1, 1000)), ax.b(), ax.c())));
    }
}

}  // namespace
}  // namespace symcurve
