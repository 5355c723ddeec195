#include "support.hpp"
#include "symcurve/detect.hpp"
#include "symcurve/mirror.hpp"
#include "symcurve/parser.hpp"

#include <gtest/gtest.h>

namespace symcurve {
namespace {

using Kind = MirrorPrefilter::Kind;

Parametrization curve_of(const char* x, const char* y) {
    return {parse_expression(x), parse_expression(y)};
}
ComplexCurve complex_of(const char* x, const char* y) { return to_complex(curve_of(x, y)); }
Parametrization fixture(const char* id) { return parse_curve(*fixture_source(id)); }

FieldElement q(long n, long d = 1) { return FieldElement(Rational(n, d)); }

TEST(MirrorPrefilter, ParityTable) {
    EXPECT_EQ(mirror_prefilter(to_complex(fixture("appendix-43"))).kind, Kind::Reject);
    EXPECT_EQ(mirror_prefilter(to_complex(fixture("appendix-40"))).kind, Kind::Reject);

    const MirrorPrefilter eleven = mirror_prefilter(to_complex(fixture("appendix-11")));
    EXPECT_EQ(eleven.kind, Kind::PassWith);
    EXPECT_EQ(eleven.constraint->kind, AxisConstraint::Kind::ParallelToX);

    const MirrorPrefilter parabola = mirror_prefilter(complex_of("t", "t^2"));
    EXPECT_EQ(parabola.kind, Kind::PassWith);
    EXPECT_EQ(parabola.constraint->kind, AxisConstraint::Kind::ParallelToY);

    EXPECT_EQ(mirror_prefilter(complex_of("t^2 + t", "t^2")).kind, Kind::PassUnconstrained);
}

TEST(MirrorPrefilter, EqualOddDegreesConstrainTheNormal) {
    const MirrorPrefilter p = mirror_prefilter(complex_of("t^3", "-t^3 + t^2"));
    ASSERT_EQ(p.kind, Kind::PassWith);
    ASSERT_EQ(p.constraint->kind, AxisConstraint::Kind::NormalToVector);
    EXPECT_TRUE(p.constraint->admits(Line(q(1), q(-1), q(0))));
    EXPECT_FALSE(p.constraint->admits(Line(q(1), q(1), q(0))));
}

TEST(MirrorPrefilter, OddCubicIsRejected) {
    EXPECT_EQ(mirror_prefilter(complex_of("t", "t^3")).kind, Kind::Reject);
    const MirrorResult r = detect_mirror(complex_of("t", "t^3"));
    EXPECT_FALSE(r.symmetric);
    EXPECT_EQ(r.rejection->kind, MirrorRejection::Kind::ParityProhibition);
}

TEST(MirrorBeta, ListedValues) {
    EXPECT_EQ(mirror_beta(to_complex(fixture("appendix-6"))), q(-1));
    EXPECT_EQ(mirror_beta(to_complex(fixture("appendix-10"))), q(-1, 3915));
    EXPECT_EQ(mirror_beta(to_complex(fixture("appendix-12"))), q(-2));
    EXPECT_EQ(mirror_beta(to_complex(fixture("appendix-42"))), q(-772, 385));
    EXPECT_EQ(mirror_beta(complex_of("t", "t^2")), q(0));
}

TEST(MirrorQstar, ListedNonRealValue) {
    const ComplexCurve c = to_complex(fixture("appendix-42"));
    EXPECT_FALSE(qstar_is_real(c, q(-772, 385)));
    EXPECT_FALSE(detect_mirror(c).symmetric);
}

TEST(MirrorSystem, ListedFailure) {
    const ComplexCurve c = to_complex(fixture("appendix-10"));
    EXPECT_TRUE(verify_system_Wprime(c, q(-1, 3915)));
    EXPECT_FALSE(detect_mirror(c).symmetric);
}

// Each axis is checked point by point by reflecting in real coordinates.
TEST(DetectMirror, AxesOfListedExamples) {
    const FieldElement r3 = FieldElement::sqrt(3);
    const std::vector<std::pair<const char*, Line>> expected = {
        {"appendix-6", Line(q(1), q(1), q(0))},
        {"appendix-11", Line(q(0), q(1), q(-2))},
        {"appendix-12", Line(q(1), q(-1), q(6))},
        {"appendix-37", Line(q(1), q(1), q(0))},
        {"appendix-7", Line(q(1), r3.scaled(Rational(1, 3)), r3 - q(5))},
        {"appendix-44", Line(q(1), r3, q(-3) - FieldElement::sqrt(2))},
    };
    for (const auto& [id, axis] : expected) {
        const Parametrization p = fixture(id);
        const MirrorResult r = detect_mirror(to_complex(p));
        ASSERT_TRUE(r.symmetric) << id;
        EXPECT_EQ(*r.axis, axis) << id << ": " << r.axis->to_string();
        EXPECT_TRUE(testing::sample_mirror_oracle(p, *r.beta, axis)) << id;
    }
}

TEST(DetectMirror, SmallCurves) {
    const MirrorResult parabola = detect_mirror(complex_of("t", "t^2"));
    ASSERT_TRUE(parabola.symmetric);
    EXPECT_EQ(*parabola.axis, Line(q(1), q(0), q(0)));

    const Parametrization shifted = curve_of("t + 3", "t^2 + 5");
    const MirrorResult r = detect_mirror(to_complex(shifted));
    ASSERT_TRUE(r.symmetric);
    EXPECT_EQ(*r.axis, Line(q(1), q(0), q(-3)));
    EXPECT_TRUE(testing::sample_mirror_oracle(shifted, *r.beta, *r.axis));
}

TEST(DetectMirror, ReflectionSymmetricOverTheDiagonal) {
    // c_{n-1} = 0 and c_n conj(c_2) real with n - 2 odd: the naive parity rule
    // rejects this, but y = x is an axis.
    const Parametrization p = curve_of("t^5 + t^2", "-t^5 + t^2");
    const Line diag(q(1), q(-1), q(0));
    ASSERT_TRUE(testing::sample_mirror_oracle(p, q(0), diag));
    const auto fast = mirror_fastpath_cn1_zero(to_complex(p));
    ASSERT_TRUE(fast);
    EXPECT_TRUE(fast->symmetric);
    EXPECT_EQ(*fast->axis, diag);
    const MirrorResult full = detect_mirror(to_complex(p));
    EXPECT_TRUE(full.symmetric);
    EXPECT_EQ(*full.axis, diag);
}

TEST(DetectMirror, FastpathMatchesGeneralPath) {
    testing::Gen g(31);
    int compared = 0;
    for (int i = 0; i < 80; ++i) {
        const int deg = 4 + i % 20;
        PlantOptions opts;
        opts.zero_subleading = true;
        Parametrization p = random_planted_mirror(deg, 1200 + i, opts).curve;
        if (i % 2 == 1 && deg >= 4) {
            p.x += RealPoly::monomial(FieldElement(g.between(1, 5)), static_cast<int>(g.between(1, deg - 2)));
        }
        if (classify(p).tag != CurveClass::Tag::Proper) continue;
        const ComplexCurve c = to_complex(p);
        const auto fast = mirror_fastpath_cn1_zero(c);
        ASSERT_TRUE(fast) << i;
        const MirrorResult general = detect_mirror_general(c);
        ASSERT_EQ(fast->symmetric, general.symmetric) << "case " << i;
        if (general.symmetric) ASSERT_EQ(*fast->axis, *general.axis);
        ++compared;
    }
    EXPECT_GT(compared, 60);
}

TEST(DetectMirror, PlantedAxesRecovered) {
    for (int i = 0; i < 100; ++i) {
        const PlantedCurve pc = random_planted_mirror(2 + i % 29, 8000 + i);
        const MirrorResult r = detect_mirror(to_complex(pc.curve));
        ASSERT_TRUE(r.symmetric) << i;
        ASSERT_EQ(*r.axis, *pc.truth.axis) << i;
        if (r.axis_constraint) ASSERT_TRUE(r.axis_constraint->admits(*r.axis)) << i;
    }
}

TEST(MirrorOracle, ShiftedAxisFails) {
    const ComplexCurve c = to_complex(fixture("appendix-6"));
    EXPECT_TRUE(oracle_check_mirror(c, q(-1), Line(q(1), q(1), q(0))));
    EXPECT_FALSE(oracle_check_mirror(c, q(-1), Line(q(1), q(1), q(1, 1000))));
    EXPECT_FALSE(oracle_check_mirror(c, q(-1), Line(q(1), q(-1), q(0))));
}

}  // namespace
}  // namespace symcurve
