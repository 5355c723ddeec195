#include "symcurve/detect.hpp"

#include "symcurve/errors.hpp"

namespace symcurve {

namespace {

std::string dump(const Parametrization& p) {
    return "x(t) = " + to_string(p.x) + "\ny(t) = " + to_string(p.y);
}

}  // namespace

bool oracle_check_central(const ComplexCurve& curve, const FieldElement& beta, const Point& center) {
    const ComplexPoly lhs =
        -curve.z() + ComplexPoly::constant(center.as_complex() * FieldElement(2L));
    return lhs == compose_linear(curve.z(), FieldElement(-1L), beta);
}

bool oracle_check_mirror(const ComplexCurve& curve, const FieldElement& beta, const Line& axis) {
    // reflection about the line through z0 with direction d: z0 + (d / conj(d)) conj(z - z0)
    const ComplexElement d(-axis.b(), axis.a());
    const ComplexElement u = d.conj() * d.inverse();
    const ComplexPoly z0 = ComplexPoly::constant(axis.base_point().as_complex());
    const ComplexPoly lhs = conjugate_poly(curve.z() - z0);
    const ComplexPoly rhs = (compose_linear(curve.z(), FieldElement(-1L), beta) - z0).scale(u);
    return lhs == rhs;
}

SymmetryReport detect_all(const Parametrization& p) {
    SymmetryReport report;
    report.curve_class = classify(p);
    report.degrees = {p.x.degree(), p.y.degree(), std::max(p.x.degree(), p.y.degree())};

    switch (report.curve_class.tag) {
        case CurveClass::Tag::Point:
            report.notes.emplace_back("constant parametrization: the curve is a single point");
            return report;
        case CurveClass::Tag::Line:
            report.notes.emplace_back(
                "the curve is a line: symmetric about each of its points and about infinitely many axes");
            return report;
        case CurveClass::Tag::Improper:
            report.notes.emplace_back("parametrization is not proper (gcd degree " +
                                      std::to_string(report.curve_class.gcd_degree) +
                                      "); reparametrize properly before testing symmetry");
            return report;
        case CurveClass::Tag::Proper: break;
    }

    const ComplexCurve curve = to_complex(p, report.curve_class);
    report.central = detect_central(curve);
    report.mirror = detect_mirror(curve);
    report.notes.emplace_back("polynomial curves admit no rotation symmetry of order > 2");

    const auto& central = *report.central;
    const auto& mirror = *report.mirror;
    if (central.symmetric && mirror.symmetric)
        throw InternalConsistencyError("both central and mirror symmetry reported\n" + dump(p));

    if (central.symmetric) {
        if (!oracle_check_central(curve, *central.beta, *central.center))
            throw InternalConsistencyError("central oracle failed for center " +
                                           central.center->to_string() + ", beta " +
                                           central.beta->to_string() + "\n" + dump(p));
        report.oracle_verified = true;
    }
    if (mirror.symmetric) {
        if (!oracle_check_mirror(curve, *mirror.beta, *mirror.axis))
            throw InternalConsistencyError("mirror oracle failed for axis " + mirror.axis->to_string() +
                                           ", beta " + mirror.beta->to_string() + "\n" + dump(p));
        report.oracle_verified = true;
    }
    return report;
}

}  // namespace symcurve
