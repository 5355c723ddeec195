#pragma once

// Mirror symmetry of a polynomial curve.
//
// The curve is symmetric about a line iff, for a point z0 on it and the
// rotation e^{i phi} that makes it horizontal, w(t) = (z(t) - z0) e^{i phi}
// satisfies conj(w(t)) = w(alpha t + beta). The reparametrization must have
// alpha = -1, the phase is fixed by the leading coefficients
// (e^{-2 i phi} = c_n (-1)^n / conj(c_n)), beta comes from the next
// equation, and what remains is the triangular system W' plus a realness
// condition on the constant equation, which is the axis itself.

#include "symcurve/curve.hpp"
#include "symcurve/geometry.hpp"

#include <optional>
#include <string>

namespace symcurve {

/// Direction an axis is forced into by the degree parities of x and y.
struct AxisConstraint {
    enum class Kind { ParallelToX, ParallelToY, NormalToVector };
    Kind kind;
    /// (a_r, a_s) for NormalToVector: the axis normal (A, B) is parallel to it,
    /// so the axis itself runs perpendicular to the leading direction.
    FieldElement dx;
    FieldElement dy;

    bool admits(const Line& axis) const;
    friend bool operator==(const AxisConstraint&, const AxisConstraint&) = default;
    std::string to_string() const;
};

struct MirrorPrefilter {
    enum class Kind { Reject, PassWith, PassUnconstrained };
    Kind kind = Kind::PassUnconstrained;
    std::optional<AxisConstraint> constraint;
};

struct MirrorRejection {
    enum class Kind { ParityProhibition, SystemFails, QstarNotReal, SpecialCaseCoefficient };
    Kind kind;
    /// Failing equation [k] (SystemFails) or coefficient index (SpecialCaseCoefficient).
    int index = 0;

    friend bool operator==(const MirrorRejection&, const MirrorRejection&) = default;
    std::string to_string() const;
};

struct MirrorResult {
    bool symmetric = false;
    std::optional<Line> axis;
    std::optional<MirrorRejection> rejection;
    std::optional<FieldElement> beta;
    std::optional<AxisConstraint> axis_constraint;
    bool used_fastpath = false;
};

/// Degree-parity table: r, s odd and r != s rejects; r = s odd forces the axis
/// perpendicular to (a_r, a_s); an odd degree on one side forbids axes parallel to
/// that coordinate axis; with both even the larger degree decides; r = s even
/// says nothing.
MirrorPrefilter mirror_prefilter(const ComplexCurve& curve);

/// beta = -2 Re(c_n conj(c_{n-1})) / (n |c_n|^2); always real.
FieldElement mirror_beta(const ComplexCurve& curve);

/// Equations [k], k = n-1 down to 1, at alpha = -1:
/// conj(c_k) c_n (-1)^(n-k) = conj(c_n) sum_{j>=k} c_j C(j,k) beta^(j-k).
/// Returns the first failing k.
std::optional<int> verify_system_Wprime(const ComplexCurve& curve, const FieldElement& beta);

/// Square-root-free form of "Q*(beta) is real", Q(beta) = c_1 beta + ... + c_n beta^n:
/// Im(Q conj(c_n)) = 0 for odd n, Re(Q conj(c_n)) = 0 for even n.
bool qstar_is_real(const ComplexCurve& curve, const FieldElement& beta);

/// The axis conj(c_n) z - c_n (-1)^n conj(z) + (-1)^n conj(c_0) c_n - conj(c_n) c_0
/// - conj(c_n) Q(beta) = 0 written as A x + B y + C = 0. Throws
/// InternalConsistencyError if the constant does not come out real.
Line axis_from(const ComplexCurve& curve, const FieldElement& beta);

/// Shortcut for c_{n-1} = 0 (so beta = 0 and Q*(0) = 0): symmetric iff every
/// [k], 1 <= k <= n-2, holds, i.e. P_k = c_n conj(c_k) is real when n - k is
/// even and purely imaginary when n - k is odd. nullopt if c_{n-1} != 0.
std::optional<MirrorResult> mirror_fastpath_cn1_zero(const ComplexCurve& curve);

/// Full pipeline: parity table, fastpath, beta, W', Q*, axis, constraint check.
MirrorResult detect_mirror(const ComplexCurve& curve);

/// beta, W', Q* and axis only: no parity table, no fastpath.
MirrorResult detect_mirror_general(const ComplexCurve& curve);

}  // namespace symcurve
