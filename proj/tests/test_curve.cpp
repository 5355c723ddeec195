#include "support.hpp"
#include "symcurve/curve.hpp"
#include "symcurve/parser.hpp"

#include <gtest/gtest.h>

namespace symcurve {
namespace {

Parametrization curve(const char* x, const char* y) {
    return {parse_expression(x), parse_expression(y)};
}

TEST(Classify, ConstantIsPoint) {
    EXPECT_EQ(classify(curve("3", "5")).tag, CurveClass::Tag::Point);
}

TEST(Classify, AffineIsLineWithWitness) {
    const CurveClass c = classify(curve("t", "2t+1"));
    ASSERT_EQ(c.tag, CurveClass::Tag::Line);
    EXPECT_EQ(*c.line, Line(FieldElement(2L), FieldElement(-1L), FieldElement(1L)));
    EXPECT_EQ(c.line->to_string(), "2*x - y + 1 = 0");
}

TEST(Classify, LinearDependenceOfHigherDegree) {
    // y = 3x - 2 with x of degree 5
    const CurveClass c = classify(curve("t^5 - t", "3t^5 - 3t - 2"));
    ASSERT_EQ(c.tag, CurveClass::Tag::Line);
    EXPECT_TRUE(c.line->contains(Point{FieldElement(1L), FieldElement(1L)}));
    EXPECT_EQ(classify(curve("7", "t^3")).tag, CurveClass::Tag::Line);
    EXPECT_EQ(classify(curve("t^2", "-1/2")).tag, CurveClass::Tag::Line);
}

TEST(Classify, ImproperCarriesGcdDegree) {
    const CurveClass c = classify(curve("t^2", "t^4"));
    EXPECT_EQ(c.tag, CurveClass::Tag::Improper);
    EXPECT_EQ(c.gcd_degree, 2);
    EXPECT_EQ(classify(curve("(t^2+1)^3", "t^2 + 5")).tag, CurveClass::Tag::Improper);
}

TEST(Classify, ProperCurves) {
    EXPECT_EQ(classify(curve("t", "t^2")).tag, CurveClass::Tag::Proper);
    EXPECT_EQ(classify(curve("t^2", "t^3")).tag, CurveClass::Tag::Proper);
}

TEST(Classify, EveryListedExampleIsProper) {
    for (const auto& fx : appendix_corpus())
        EXPECT_EQ(classify(fx.parametrization()).tag, CurveClass::Tag::Proper) << fx.id;
    EXPECT_EQ(classify(example_one().parametrization()).tag, CurveClass::Tag::Proper);
}

TEST(ComplexForm, Parabola) {
    const ComplexCurve c = to_complex(curve("t", "t^2"));
    ASSERT_EQ(c.n(), 2);
    EXPECT_EQ(c.r(), 1);
    EXPECT_EQ(c.s(), 2);
    EXPECT_EQ(c.c(0), ComplexElement());
    EXPECT_EQ(c.c(1), ComplexElement(1L));
    EXPECT_EQ(c.c(2), ComplexElement::i());
}

TEST(ComplexForm, CubicWithZeroSubleading) {
    const ComplexCurve c = to_complex(curve("t", "t^3"));
    EXPECT_EQ(c.n(), 3);
    EXPECT_TRUE(c.c(2).is_zero());
    EXPECT_EQ(c.c(3), ComplexElement::i());
}

TEST(ComplexForm, ListedCubic) {
    const ComplexCurve c = to_complex(parse_curve(*fixture_source("appendix-3")));
    EXPECT_EQ(c.n(), 3);
    EXPECT_EQ(c.c(0), ComplexElement(FieldElement(-6L), FieldElement(-2L)));
    EXPECT_TRUE(c.c(2).is_zero());
}

TEST(ComplexForm, RejectsDegenerateInputWithClass) {
    try {
        to_complex(curve("t^2", "t^4"));
        FAIL() << "expected DegenerateCurveError";
    } catch (const DegenerateCurveError& e) {
        EXPECT_EQ(e.curve_class().tag, CurveClass::Tag::Improper);
        EXPECT_NE(std::string(e.what()).find("gcd degree 2"), std::string::npos);
    }
    EXPECT_THROW(to_complex(curve("1", "2")), DegenerateCurveError);
    EXPECT_THROW(to_complex(curve("t", "t")), DegenerateCurveError);
}

TEST(ComplexForm, SplittingRecoversComponents) {
    testing::Gen g(31);
    for (int i = 0; i < 50; ++i) {
        const Parametrization p{g.field_poly(static_cast<int>(g.between(2, 9))),
                                g.field_poly(static_cast<int>(g.between(2, 9)))};
        if (classify(p).tag != CurveClass::Tag::Proper) continue;
        const ComplexCurve c = to_complex(p);
        ASSERT_EQ(real_part(c.z()), p.x);
        ASSERT_EQ(imag_part(c.z()), p.y);
        ASSERT_EQ(c.n(), std::max(p.x.degree(), p.y.degree()));
    }
}

}  // namespace
}  // namespace symcurve
