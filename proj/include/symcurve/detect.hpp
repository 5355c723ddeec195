#pragma once

#include "symcurve/central.hpp"
#include "symcurve/curve.hpp"
#include "symcurve/mirror.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symcurve {

struct Degrees {
    int r = -1;
    int s = -1;
    int n = -1;
    friend bool operator==(const Degrees&, const Degrees&) = default;
};

struct SymmetryReport {
    CurveClass curve_class;
    Degrees degrees;
    /// Absent for Point, Line and Improper inputs.
    std::optional<CentralResult> central;
    std::optional<MirrorResult> mirror;
    /// True iff a Symmetric verdict was confirmed by the polynomial identity oracle.
    bool oracle_verified = false;
    std::vector<std::string> notes;
};

/// -z(t) + 2 z0 == z(-t + beta), exactly.
bool oracle_check_central(const ComplexCurve& curve, const FieldElement& beta, const Point& center);

/// conj(z(t) - z0) == (z(-t + beta) - z0) * conj(d) / d, exactly, with z0 a
/// point of the axis and d = -B + A i its direction.
bool oracle_check_mirror(const ComplexCurve& curve, const FieldElement& beta, const Line& axis);

/// Classifies, runs both detectors on proper curves, confirms every positive
/// verdict with the oracle and checks that central and mirror symmetry never
/// coexist. Throws InternalConsistencyError when any of that fails.
SymmetryReport detect_all(const Parametrization& p);

}  // namespace symcurve
