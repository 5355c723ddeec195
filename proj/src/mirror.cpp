#include "symcurve/mirror.hpp"

#include "symcurve/errors.hpp"

namespace symcurve {

bool AxisConstraint::admits(const Line& axis) const {
    switch (kind) {
        case Kind::ParallelToX: return axis.parallel_to(FieldElement(1L), FieldElement());
        case Kind::ParallelToY: return axis.parallel_to(FieldElement(), FieldElement(1L));
        case Kind::NormalToVector: return axis.parallel_to(-dy, dx);
    }
    return false;
}

std::string AxisConstraint::to_string() const {
    switch (kind) {
        case Kind::ParallelToX: return "parallel to x-axis";
        case Kind::ParallelToY: return "parallel to y-axis";
        case Kind::NormalToVector:
            return "normal to (" + dx.to_string() + ", " + dy.to_string() + ")";
    }
    return "?";
}

std::string MirrorRejection::to_string() const {
    switch (kind) {
        case Kind::ParityProhibition: return "deg x(t), deg y(t) odd and different";
        case Kind::SystemFails: return "system W' fails at equation [" + std::to_string(index) + "]";
        case Kind::QstarNotReal: return "Q*(beta) not real";
        case Kind::SpecialCaseCoefficient:
            return "c_{n-1} = 0 but c_n conj(c_" + std::to_string(index) + ") has the wrong phase";
    }
    return "?";
}

namespace {

bool is_odd(int v) { return v % 2 != 0; }

// Q(beta) = z(beta) - c_0
ComplexElement tail_sum(const ComplexCurve& curve, const FieldElement& beta) {
    return curve.z().eval(ComplexElement(beta)) - curve.c(0);
}

MirrorResult rejected(MirrorRejection why) {
    MirrorResult r;
    r.rejection = why;
    return r;
}

void check_constraint(const ComplexCurve& curve, const MirrorResult& r) {
    if (!r.axis || !r.axis_constraint) return;
    if (!r.axis_constraint->admits(*r.axis))
        throw InternalConsistencyError(
            "axis " + r.axis->to_string() + " violates the degree constraint (" +
            r.axis_constraint->to_string() + ") for x(t) = " + to_string(curve.source().x) +
            ", y(t) = " + to_string(curve.source().y));
}

}  // namespace

MirrorPrefilter mirror_prefilter(const ComplexCurve& curve) {
    const int r = curve.r();
    const int s = curve.s();
    MirrorPrefilter out;
    auto pass = [&](AxisConstraint::Kind k, FieldElement dx = {}, FieldElement dy = {}) {
        out.kind = MirrorPrefilter::Kind::PassWith;
        out.constraint = AxisConstraint{k, std::move(dx), std::move(dy)};
    };
    if (is_odd(r) && is_odd(s)) {
        if (r != s) {
            out.kind = MirrorPrefilter::Kind::Reject;
        } else {
            pass(AxisConstraint::Kind::NormalToVector, curve.source().x.leading(),
                 curve.source().y.leading());
        }
    } else if (is_odd(r)) {
        pass(AxisConstraint::Kind::ParallelToY);
    } else if (is_odd(s)) {
        pass(AxisConstraint::Kind::ParallelToX);
    } else if (r < s) {
        pass(AxisConstraint::Kind::ParallelToY);
    } else if (r > s) {
        pass(AxisConstraint::Kind::ParallelToX);
    }
    return out;
}

FieldElement mirror_beta(const ComplexCurve& curve) {
    const int n = curve.n();
    const ComplexElement& cn = curve.c(n);
    const ComplexElement prod = cn * curve.c(n - 1).conj();
    return FieldElement(-2L) * prod.re *
           (FieldElement(static_cast<long>(n)) * cn.modulus_squared()).inverse();
}

std::optional<int> verify_system_Wprime(const ComplexCurve& curve, const FieldElement& beta) {
    const int n = curve.n();
    const auto& c = curve.c();
    const ComplexElement cn = c[n];
    const ComplexElement cn_bar = cn.conj();
    const BinomialTable binom(static_cast<std::size_t>(n));
    std::vector<FieldElement> beta_pow(n + 1);
    beta_pow[0] = FieldElement(1L);
    for (int k = 1; k <= n; ++k) beta_pow[k] = beta_pow[k - 1] * beta;

    for (int k = n - 1; k >= 1; --k) {
        ComplexElement sum;
        for (int j = k; j <= n; ++j) {
            if (c[j].is_zero() || beta_pow[j - k].is_zero()) continue;
            sum += c[j] * beta_pow[j - k].scaled(binom(j, k));
        }
        ComplexElement lhs = c[k].conj() * cn;
        if (is_odd(n - k)) lhs = -lhs;
        if (!(lhs == cn_bar * sum)) return k;
    }
    return std::nullopt;
}

bool qstar_is_real(const ComplexCurve& curve, const FieldElement& beta) {
    const ComplexElement v = tail_sum(curve, beta) * curve.c(curve.n()).conj();
    return is_odd(curve.n()) ? v.im.is_zero() : v.re.is_zero();
}

Line axis_from(const ComplexCurve& curve, const FieldElement& beta) {
    const int n = curve.n();
    const ComplexElement& cn = curve.c(n);
    const ComplexElement& c0 = curve.c(0);
    const ComplexElement sign = is_odd(n) ? ComplexElement(-1L) : ComplexElement(1L);
    // Constant term of conj(c_n) z - c_n (-1)^n conj(z) + D = 0.
    const ComplexElement d =
        sign * c0.conj() * cn - cn.conj() * c0 - cn.conj() * tail_sum(curve, beta);
    // Rewrite as conj(gamma) z + gamma conj(z) + C = 0 with C real.
    ComplexElement gamma = cn;
    ComplexElement constant = d;
    if (!is_odd(n)) {
        gamma = ComplexElement(FieldElement(), FieldElement(-1L)) * cn;
        constant = ComplexElement::i() * d;
    }
    if (!constant.is_real())
        throw InternalConsistencyError("axis constant " + constant.to_string() +
                                       " is not real for beta = " + beta.to_string() +
                                       ", x(t) = " + to_string(curve.source().x) +
                                       ", y(t) = " + to_string(curve.source().y));
    return Line(FieldElement(2L) * gamma.re, FieldElement(2L) * gamma.im, constant.re);
}

std::optional<MirrorResult> mirror_fastpath_cn1_zero(const ComplexCurve& curve) {
    const int n = curve.n();
    if (!curve.c(n - 1).is_zero()) return std::nullopt;
    const ComplexElement& cn = curve.c(n);
    MirrorResult r;
    r.used_fastpath = true;
    r.beta = FieldElement();
    for (int k = 1; k <= n - 2; ++k) {
        const ComplexElement p = cn * curve.c(k).conj();
        const bool ok = is_odd(n - k) ? p.re.is_zero() : p.im.is_zero();
        if (!ok) {
            r.rejection = MirrorRejection{MirrorRejection::Kind::SpecialCaseCoefficient, k};
            return r;
        }
    }
    r.symmetric = true;
    r.axis = axis_from(curve, FieldElement());
    return r;
}

MirrorResult detect_mirror_general(const ComplexCurve& curve) {
    const FieldElement beta = mirror_beta(curve);
    MirrorResult r;
    r.beta = beta;
    if (auto failing = verify_system_Wprime(curve, beta)) {
        r.rejection = MirrorRejection{MirrorRejection::Kind::SystemFails, *failing};
        return r;
    }
    if (!qstar_is_real(curve, beta)) {
        r.rejection = MirrorRejection{MirrorRejection::Kind::QstarNotReal};
        return r;
    }
    r.symmetric = true;
    r.axis = axis_from(curve, beta);
    return r;
}

MirrorResult detect_mirror(const ComplexCurve& curve) {
    const MirrorPrefilter pre = mirror_prefilter(curve);
    const FieldElement beta = mirror_beta(curve);
    if (pre.kind == MirrorPrefilter::Kind::Reject) {
        MirrorResult r = rejected({MirrorRejection::Kind::ParityProhibition});
        r.beta = beta;
        return r;
    }
    MirrorResult r;
    if (auto fast = mirror_fastpath_cn1_zero(curve)) {
        r = std::move(*fast);
    } else {
        r = detect_mirror_general(curve);
    }
    r.axis_constraint = pre.constraint;
    check_constraint(curve, r);
    return r;
}

}  // namespace symcurve
