#include "symcurve/report.hpp"

#include <sstream>

namespace symcurve {

namespace {

using nlohmann::json;

json exact(const FieldElement& v) { return v.to_string(); }

json exact_or_null(const std::optional<FieldElement>& v) { return v ? exact(*v) : json(nullptr); }

json float_or_null(const std::optional<FieldElement>& v) { return v ? json(v->to_double()) : json(nullptr); }

json point_json(const Point& p) {
    return {{"x", exact(p.x)}, {"y", exact(p.y)}, {"x_float", p.x.to_double()}, {"y_float", p.y.to_double()}};
}

json line_json(const Line& l) {
    return {{"A", exact(l.a())},
            {"B", exact(l.b())},
            {"C", exact(l.c())},
            {"A_float", l.a().to_double()},
            {"B_float", l.b().to_double()},
            {"C_float", l.c().to_double()},
            {"equation", l.to_string()}};
}

json central_json(const CentralResult& c) {
    json j;
    j["symmetric"] = c.symmetric;
    j["beta"] = exact_or_null(c.beta);
    j["beta_float"] = float_or_null(c.beta);
    if (c.beta_candidate) {
        j["beta_candidate"] = {{"re", exact(c.beta_candidate->re)}, {"im", exact(c.beta_candidate->im)}};
    } else {
        j["beta_candidate"] = nullptr;
    }
    j["center"] = c.center ? point_json(*c.center) : json(nullptr);
    j["reason"] = c.rejection ? json(c.rejection->to_string()) : json(nullptr);
    j["fastpath"] = c.used_fastpath;
    return j;
}

json mirror_json(const MirrorResult& m) {
    json j;
    j["symmetric"] = m.symmetric;
    j["beta"] = exact_or_null(m.beta);
    j["beta_float"] = float_or_null(m.beta);
    j["axis"] = m.axis ? line_json(*m.axis) : json(nullptr);
    j["reason"] = m.rejection ? json(m.rejection->to_string()) : json(nullptr);
    j["constraint"] = m.axis_constraint ? json(m.axis_constraint->to_string()) : json(nullptr);
    j["fastpath"] = m.used_fastpath;
    return j;
}

std::string beta_suffix(const std::optional<FieldElement>& beta) {
    return beta ? " (beta = " + beta->to_string() + ")" : "";
}

}  // namespace

std::string format_text(const SymmetryReport& report) {
    std::ostringstream out;
    const auto& cls = report.curve_class;
    out << "class: " << to_string(cls.tag);
    if (cls.tag == CurveClass::Tag::Line && cls.line) out << " (" << cls.line->to_string() << ")";
    if (cls.tag == CurveClass::Tag::Improper) out << " (gcd degree " << cls.gcd_degree << ")";
    out << "\n";
    const auto& d = report.degrees;
    out << "degrees: r = " << d.r << ", s = " << d.s << ", n = " << d.n << "\n";
    if (report.central) {
        const auto& c = *report.central;
        if (c.symmetric) {
            out << "central: yes, center " << c.center->to_string() << beta_suffix(c.beta) << "\n";
        } else {
            out << "central: no (" << c.rejection->to_string() << ")\n";
        }
    }
    if (report.mirror) {
        const auto& m = *report.mirror;
        if (m.symmetric) {
            out << "mirror: yes, axis " << m.axis->to_string() << beta_suffix(m.beta) << "\n";
        } else {
            out << "mirror: no (" << m.rejection->to_string() << ")\n";
        }
    }
    if (report.central || report.mirror)
        out << "oracle: " << (report.oracle_verified ? "verified" : "not needed") << "\n";
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    return out.str();
}

nlohmann::json to_json(const SymmetryReport& report) {
    json j;
    const auto& cls = report.curve_class;
    j["class"] = to_string(cls.tag);
    if (cls.tag == CurveClass::Tag::Improper) j["gcd_degree"] = cls.gcd_degree;
    if (cls.tag == CurveClass::Tag::Line && cls.line) j["line"] = line_json(*cls.line);
    j["degrees"] = {{"r", report.degrees.r}, {"s", report.degrees.s}, {"n", report.degrees.n}};
    j["central"] = report.central ? central_json(*report.central) : json(nullptr);
    j["mirror"] = report.mirror ? mirror_json(*report.mirror) : json(nullptr);
    j["oracle_verified"] = report.oracle_verified;
    j["notes"] = report.notes;
    return j;
}

}  // namespace symcurve
