#include "symcurve/central.hpp"

#include <stdexcept>

namespace symcurve {

std::string CentralRejection::to_string() const {
    switch (kind) {
        case Kind::EvenDegreeX: return "deg x(t) is even";
        case Kind::EvenDegreeY: return "deg y(t) is even";
        case Kind::BetaNotReal: return "beta not real";
        case Kind::SystemFails: return "system S fails at equation (" + std::to_string(index) + ")";
        case Kind::EvenCoefficientNonzero:
            return "c_{n-1} = 0 but c_" + std::to_string(index) + " != 0 with even index";
    }
    return "?";
}

namespace {

bool is_odd(int v) { return v % 2 != 0; }

CentralResult rejected(CentralRejection why) {
    CentralResult r;
    r.rejection = why;
    return r;
}

CentralResult accepted(const ComplexCurve& curve, const FieldElement& beta) {
    CentralResult r;
    r.symmetric = true;
    r.beta = beta;
    r.center = center_from(curve, beta);
    return r;
}

}  // namespace

std::optional<CentralRejection> central_prefilter(const ComplexCurve& curve) {
    if (!is_odd(curve.r())) return CentralRejection{CentralRejection::Kind::EvenDegreeX};
    if (!is_odd(curve.s())) return CentralRejection{CentralRejection::Kind::EvenDegreeY};
    return std::nullopt;
}

ComplexElement central_beta_candidate(const ComplexCurve& curve) {
    const int n = curve.n();
    if (n < 3 || !is_odd(n)) throw std::invalid_argument("central candidate needs odd n >= 3");
    const ComplexElement& cn = curve.c(n);
    // Divide only by the real |c_n|^2.
    const FieldElement scale = (FieldElement(static_cast<long>(n)) * cn.modulus_squared()).inverse();
    return curve.c(n - 1) * cn.conj() * (FieldElement(-2L) * scale);
}

std::optional<FieldElement> central_candidate(const ComplexCurve& curve) {
    ComplexElement beta = central_beta_candidate(curve);
    if (!beta.is_real()) return std::nullopt;
    return beta.re;
}

std::optional<int> verify_system_S(const ComplexCurve& curve, const FieldElement& beta) {
    const int n = curve.n();
    const auto& c = curve.c();
    const BinomialTable binom(static_cast<std::size_t>(n));
    std::vector<FieldElement> beta_pow(n + 1);
    beta_pow[0] = FieldElement(1L);
    for (int k = 1; k <= n; ++k) beta_pow[k] = beta_pow[k - 1] * beta;

    for (int i = n; i >= 1; --i) {
        ComplexElement sum;
        for (int k = i; k <= n; ++k) {
            if (c[k].is_zero() || beta_pow[k - i].is_zero()) continue;
            sum += c[k] * beta_pow[k - i].scaled(binom(k, i));
        }
        // -c_i = (-1)^i * sum
        const bool holds = is_odd(i) ? (sum == c[i]) : (sum == -c[i]);
        if (!holds) return i;
    }
    return std::nullopt;
}

std::optional<int> verify_system_S_identity(const ComplexCurve& curve, const FieldElement& beta) {
    const ComplexPoly w = compose_linear(curve.z(), FieldElement(-1L), beta) + curve.z();
    for (int k = w.degree(); k >= 1; --k)
        if (!w.coeffs()[k].is_zero()) return k;
    return std::nullopt;
}

Point center_from(const ComplexCurve& curve, const FieldElement& beta) {
    const ComplexElement zb = curve.z().eval(ComplexElement(beta));
    const ComplexElement z0 = (curve.c(0) + zb) * FieldElement(Rational(1, 2));
    return {z0.re, z0.im};
}

std::optional<CentralResult> central_fastpath_cn1_zero(const ComplexCurve& curve) {
    const int n = curve.n();
    if (!is_odd(n) || n < 3 || !curve.c(n - 1).is_zero()) return std::nullopt;
    for (int k = 2; k <= n - 2; k += 2) {
        if (!curve.c(k).is_zero()) {
            CentralResult r = rejected({CentralRejection::Kind::EvenCoefficientNonzero, k});
            r.beta = FieldElement();
            r.beta_candidate = ComplexElement();
            r.used_fastpath = true;
            return r;
        }
    }
    CentralResult r;
    r.symmetric = true;
    r.beta = FieldElement();
    r.beta_candidate = ComplexElement();
    r.center = Point{curve.c(0).re, curve.c(0).im};
    r.used_fastpath = true;
    return r;
}

CentralResult detect_central_general(const ComplexCurve& curve) {
    const int n = curve.n();
    if (!is_odd(n)) {
        // alpha^n = -1 has no real root; report which component carries the even degree.
        return rejected(*central_prefilter(curve));
    }
    const ComplexElement candidate = central_beta_candidate(curve);
    if (!candidate.is_real()) {
        CentralResult r = rejected({CentralRejection::Kind::BetaNotReal});
        r.beta_candidate = candidate;
        return r;
    }
    const FieldElement& beta = candidate.re;
    if (auto failing = verify_system_S(curve, beta)) {
        CentralResult r = rejected({CentralRejection::Kind::SystemFails, *failing});
        r.beta = beta;
        r.beta_candidate = candidate;
        return r;
    }
    CentralResult r = accepted(curve, beta);
    r.beta_candidate = candidate;
    return r;
}

CentralResult detect_central(const ComplexCurve& curve) {
    const int n = curve.n();
    if (!is_odd(n)) return rejected(*central_prefilter(curve));

    const ComplexElement candidate = central_beta_candidate(curve);
    if (!candidate.is_real()) {
        CentralResult r = rejected({CentralRejection::Kind::BetaNotReal});
        r.beta_candidate = candidate;
        return r;
    }
    if (auto why = central_prefilter(curve)) {
        CentralResult r = rejected(*why);
        r.beta = candidate.re;
        r.beta_candidate = candidate;
        return r;
    }
    if (auto fast = central_fastpath_cn1_zero(curve)) return *fast;
    return detect_central_general(curve);
}

}  // namespace symcurve
