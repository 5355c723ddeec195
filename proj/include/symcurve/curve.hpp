#pragma once

#include "symcurve/geometry.hpp"
#include "symcurve/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcurve {

/// The input pair (x(t), y(t)), stored exactly as expanded.
struct Parametrization {
    RealPoly x;
    RealPoly y;
    friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

struct CurveClass {
    enum class Tag { Point, Line, Proper, Improper };

    Tag tag = Tag::Proper;
    /// Set for Tag::Line: the line carrying the whole image.
    std::optional<symcurve::Line> line;
    /// Set for Tag::Improper: deg_t gcd(x(t)-x(s), y(t)-y(s)) > 1.
    int gcd_degree = 1;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

const char* to_string(CurveClass::Tag tag);

/// Complex form z(t) = x(t) + i*y(t) = c_n t^n + ... + c_0 of a proper curve.
class ComplexCurve {
public:
    const std::vector<ComplexElement>& c() const { return z_.coeffs(); }
    const ComplexElement& c(std::size_t k) const { return z_.coeffs()[k]; }
    const ComplexPoly& z() const { return z_; }
    /// n = max(r, s)
    int n() const { return z_.degree(); }
    /// deg x
    int r() const { return r_; }
    /// deg y
    int s() const { return s_; }
    const Parametrization& source() const { return source_; }

private:
    friend ComplexCurve to_complex(const Parametrization& p, const CurveClass& cls);
    ComplexPoly z_;
    int r_ = 0;
    int s_ = 0;
    Parametrization source_;
};

/// Raised by to_complex on Point, Line or Improper input.
class DegenerateCurveError : public std::runtime_error {
public:
    DegenerateCurveError(CurveClass cls, const std::string& what)
        : std::runtime_error(what), cls_(std::move(cls)) {}
    const CurveClass& curve_class() const { return cls_; }

private:
    CurveClass cls_;
};

/// Point if both components are constant; Line if 1, x, y are linearly
/// dependent; Improper if the bivariate gcd degree exceeds 1; else Proper.
CurveClass classify(const Parametrization& p);

/// Builds the complex form. Throws DegenerateCurveError unless classify(p) is Proper.
ComplexCurve to_complex(const Parametrization& p);
/// As above, reusing a classification already computed for p.
ComplexCurve to_complex(const Parametrization& p, const CurveClass& cls);

}  // namespace symcurve
