#include "symcurve/curve.hpp"

namespace symcurve {

const char* to_string(CurveClass::Tag tag) {
    switch (tag) {
        case CurveClass::Tag::Point: return "point";
        case CurveClass::Tag::Line: return "line";
        case CurveClass::Tag::Proper: return "proper";
        case CurveClass::Tag::Improper: return "improper";
    }
    return "?";
}

namespace {

// If 1, x, y are linearly dependent, the line a*x + b*y + c = 0 they satisfy.
std::optional<Line> linear_dependence(const RealPoly& x, const RealPoly& y) {
    const FieldElement x0 = x.coeff(0);
    const FieldElement y0 = y.coeff(0);
    const RealPoly dx = x - RealPoly::constant(x0);
    const RealPoly dy = y - RealPoly::constant(y0);
    if (dx.is_zero()) return Line(FieldElement(1L), FieldElement(), -x0);
    if (dy.is_zero()) return Line(FieldElement(), FieldElement(1L), -y0);
    if (dx.degree() != dy.degree()) return std::nullopt;
    // dy = k*dx for the only possible k
    const FieldElement k = dy.leading() / dx.leading();
    if (!(dy - dx.scale(k)).is_zero()) return std::nullopt;
    return Line(k, FieldElement(-1L), y0 - k * x0);
}

}  // namespace

CurveClass classify(const Parametrization& p) {
    CurveClass cls;
    if (p.x.is_constant() && p.y.is_constant()) {
        cls.tag = CurveClass::Tag::Point;
        return cls;
    }
    if (auto line = linear_dependence(p.x, p.y)) {
        cls.tag = CurveClass::Tag::Line;
        cls.line = std::move(line);
        return cls;
    }
    const int d = bivariate_gcd_degree(p.x, p.y);
    if (d > 1) {
        cls.tag = CurveClass::Tag::Improper;
        cls.gcd_degree = d;
    }
    return cls;
}

ComplexCurve to_complex(const Parametrization& p) { return to_complex(p, classify(p)); }

ComplexCurve to_complex(const Parametrization& p, const CurveClass& cls) {
    switch (cls.tag) {
        case CurveClass::Tag::Point:
            throw DegenerateCurveError(cls, "parametrization is constant (a single point)");
        case CurveClass::Tag::Line:
            throw DegenerateCurveError(cls, "parametrization traces the line " + cls.line->to_string());
        case CurveClass::Tag::Improper:
            throw DegenerateCurveError(
                cls, "parametrization is not proper: generic points are hit " +
                         std::to_string(cls.gcd_degree) + " times (gcd degree " +
                         std::to_string(cls.gcd_degree) + ")");
        case CurveClass::Tag::Proper: break;
    }
    ComplexCurve curve;
    curve.z_ = to_complex_poly(p.x, p.y);
    curve.r_ = p.x.degree();
    curve.s_ = p.y.degree();
    curve.source_ = p;
    return curve;
}

}  // namespace symcurve
