#pragma once

#include "symcurve/complex.hpp"
#include "symcurve/field.hpp"

#include <string>

namespace symcurve {

struct Point {
    FieldElement x;
    FieldElement y;

    ComplexElement as_complex() const { return {x, y}; }
    friend bool operator==(const Point&, const Point&) = default;
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

/// Real line A*x + B*y + C = 0 in canonical form: the first nonzero of (A, B)
/// is made 1, and if all three are then rational they are rescaled to coprime
/// integers with that leading entry positive. Equal lines compare equal.
class Line {
public:
    /// Throws std::invalid_argument if A = B = 0.
    Line(FieldElement a, FieldElement b, FieldElement c);

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }

    bool contains(const Point& p) const { return (a_ * p.x + b_ * p.y + c_).is_zero(); }
    /// A point on the line: (0, -C/B) if B != 0, else (-C/A, 0).
    Point base_point() const;
    /// Exact test that the line runs parallel to the vector (dx, dy).
    bool parallel_to(const FieldElement& dx, const FieldElement& dy) const {
        return (a_ * dx + b_ * dy).is_zero();
    }

    friend bool operator==(const Line&, const Line&) = default;

    /// E.g. "x - y = 0", "2*x - y + 1 = 0".
    std::string to_string() const;

private:
    FieldElement a_, b_, c_;
};

}  // namespace symcurve
