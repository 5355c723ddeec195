#pragma once

// Central symmetry of a polynomial curve.
//
// A proper polynomial curve z(t) is symmetric about z0 iff
// -z(t) + 2 z0 = z(alpha t + beta) for real alpha, beta. Comparing
// coefficients gives a triangular system: the top equation forces
// alpha^n = -1 (so n odd and alpha = -1), the next one fixes
// beta = -2 c_{n-1} / (n c_n), and the remaining equations are then a pure
// check. The center is z0 = c_0 + (c_1 beta + ... + c_n beta^n) / 2.

#include "symcurve/curve.hpp"
#include "symcurve/geometry.hpp"

#include <optional>
#include <string>

namespace symcurve {

struct CentralRejection {
    enum class Kind { EvenDegreeX, EvenDegreeY, BetaNotReal, SystemFails, EvenCoefficientNonzero };
    Kind kind;
    /// Failing equation index (SystemFails) or coefficient index (EvenCoefficientNonzero).
    int index = 0;

    friend bool operator==(const CentralRejection&, const CentralRejection&) = default;
    std::string to_string() const;
};

struct CentralResult {
    bool symmetric = false;
    std::optional<Point> center;
    std::optional<CentralRejection> rejection;
    /// Set whenever the candidate beta was real.
    std::optional<FieldElement> beta;
    /// -2 c_{n-1} / (n c_n), computed whenever n is odd (even if not real).
    std::optional<ComplexElement> beta_candidate;
    /// True when the c_{n-1} = 0 shortcut decided the verdict.
    bool used_fastpath = false;
};

/// EvenDegreeX / EvenDegreeY when deg x or deg y is even, else nullopt.
std::optional<CentralRejection> central_prefilter(const ComplexCurve& curve);

/// -2 c_{n-1} conj(c_n) / (n |c_n|^2) as a complex number. Precondition: n odd, n >= 3.
ComplexElement central_beta_candidate(const ComplexCurve& curve);

/// Real part of the candidate when its imaginary part is exactly zero.
std::optional<FieldElement> central_candidate(const ComplexCurve& curve);

/// Checks -c_i = (-1)^i sum_{k>=i} c_k C(k,i) beta^(k-i) for i = n-1 down to 1
/// (equation n holds for alpha = -1, n odd). Returns the first failing i.
std::optional<int> verify_system_S(const ComplexCurve& curve, const FieldElement& beta);

/// Same verdict via the single identity z(-t + beta) + z(t) = const,
/// computed with compose_linear; returns the highest failing power.
std::optional<int> verify_system_S_identity(const ComplexCurve& curve, const FieldElement& beta);

/// z0 = c_0 + (c_1 beta + ... + c_n beta^n) / 2
Point center_from(const ComplexCurve& curve, const FieldElement& beta);

/// Shortcut for c_{n-1} = 0 (n odd): symmetric about c_0 iff every c_k with
/// k even in 1..n-2 vanishes (always for cubics). nullopt if c_{n-1} != 0.
std::optional<CentralResult> central_fastpath_cn1_zero(const ComplexCurve& curve);

/// Full pipeline: degree and beta checks, fastpath, system S, center.
CentralResult detect_central(const ComplexCurve& curve);

/// Candidate and system S only: no parity prefilter, no fastpath. Used to
/// cross-check the shortcuts.
CentralResult detect_central_general(const ComplexCurve& curve);

}  // namespace symcurve
