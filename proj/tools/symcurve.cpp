// symcurve: exact central and mirror symmetry detection for polynomial curves.
//
// Exit codes: 0 ran, 1 parse or usage error, 2 degenerate or improper input,
// 3 internal-consistency failure.

#include "symcurve/bench.hpp"
#include "symcurve/detect.hpp"
#include "symcurve/errors.hpp"
#include "symcurve/fixtures.hpp"
#include "symcurve/parser.hpp"
#include "symcurve/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace symcurve;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kDegenerate = 2;
constexpr int kInternal = 3;

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

int run_detect(const std::string& path, const std::string& format) {
    std::string text;
    try {
        text = read_input(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    Parametrization p;
    try {
        p = parse_curve(text);
    } catch (const ParseError& e) {
        std::cerr << (path.empty() || path == "-" ? "<stdin>" : path) << ":" << e.what() << "\n";
        return kParseError;
    }
    SymmetryReport report;
    try {
        report = detect_all(p);
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kInternal;
    }
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << format_text(report);
    }
    switch (report.curve_class.tag) {
        case CurveClass::Tag::Proper: return kOk;
        case CurveClass::Tag::Improper:
            std::cerr << "error: parametrization is not proper (gcd degree "
                      << report.curve_class.gcd_degree << ")\n";
            return kDegenerate;
        case CurveClass::Tag::Point:
        case CurveClass::Tag::Line:
            std::cerr << "error: degenerate curve (" << to_string(report.curve_class.tag) << ")\n";
            return kDegenerate;
    }
    return kOk;
}

int run_bench(bool suite, bool scaling, const std::vector<int>& degrees, std::uint64_t seed,
              const std::string& format) {
    json out;
    if (suite) {
        const auto rows = run_appendix_suite();
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"id", r.id},
                               {"degree", r.degree},
                               {"seconds", r.seconds},
                               {"central", r.central},
                               {"mirror", r.mirror},
                               {"matches", r.matches}});
            out["suite"] = arr;
        } else {
            std::cout << std::left << std::setw(14) << "example" << std::setw(8) << "degree"
                      << std::setw(12) << "seconds" << std::setw(9) << "central" << std::setw(8)
                      << "mirror" << "matches\n";
            for (const auto& r : rows)
                std::cout << std::left << std::setw(14) << r.id << std::setw(8) << r.degree
                          << std::setw(12) << std::setprecision(4) << r.seconds << std::setw(9)
                          << r.central << std::setw(8) << r.mirror << (r.matches ? "yes" : "NO")
                          << "\n";
        }
    }
    if (scaling) {
        const auto res = run_scaling(degrees, seed);
        if (format == "json") {
            json pts = json::array();
            for (const auto& p : res.points)
                pts.push_back({{"degree", p.degree},
                               {"kernel_seconds", p.kernel_seconds},
                               {"detect_seconds", p.detect_seconds},
                               {"symmetric", p.symmetric}});
            out["scaling"] = {{"points", pts}, {"slope", res.slope}, {"seed", seed}};
        } else {
            if (suite) std::cout << "\n";
            std::cout << std::left << std::setw(8) << "degree" << std::setw(16) << "kernel_s"
                      << std::setw(16) << "detect_s" << "symmetric\n";
            for (const auto& p : res.points)
                std::cout << std::left << std::setw(8) << p.degree << std::setw(16)
                          << std::setprecision(6) << p.kernel_seconds << std::setw(16)
                          << p.detect_seconds << (p.symmetric ? "yes" : "no") << "\n";
            std::cout << "log-log slope: " << std::setprecision(3) << res.slope << "\n";
        }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return kOk;
}

json complex_json(const ComplexElement& v) {
    return {{"re", v.re.to_string()}, {"im", v.im.to_string()}};
}

int run_gen(const std::string& kind, int degree, std::uint64_t seed, std::string out,
            const std::string& format) {
    PlantedCurve pc;
    try {
        pc = kind == "central" ? random_planted_central(degree, seed) : random_planted_mirror(degree, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    if (out.empty()) out = kind + "-" + std::to_string(degree) + "-" + std::to_string(seed);
    json truth;
    truth["kind"] = kind;
    truth["degree"] = degree;
    truth["seed"] = seed;
    if (pc.truth.center) truth["center"] = {{"x", pc.truth.center->x.to_string()}, {"y", pc.truth.center->y.to_string()}};
    if (pc.truth.axis)
        truth["axis"] = {{"A", pc.truth.axis->a().to_string()},
                         {"B", pc.truth.axis->b().to_string()},
                         {"C", pc.truth.axis->c().to_string()},
                         {"equation", pc.truth.axis->to_string()}};
    truth["base"] = {{"x", to_string(pc.base.x)}, {"y", to_string(pc.base.y)}};
    truth["substitution"] = {{"a", pc.a.to_string()}, {"b", pc.b.to_string()}};
    truth["motion"] = {{"m", complex_json(pc.motion.m)}, {"w", complex_json(pc.motion.w)}};

    const std::string curve_path = out + ".curve";
    const std::string truth_path = out + ".truth.json";
    {
        std::ofstream f(curve_path);
        f << "# planted " << kind << " symmetry, degree " << degree << ", seed " << seed << "\n"
          << format_curve(pc.curve);
        if (!f) {
            std::cerr << "error: cannot write " << curve_path << "\n";
            return kParseError;
        }
    }
    {
        std::ofstream f(truth_path);
        f << truth.dump(2) << "\n";
        if (!f) {
            std::cerr << "error: cannot write " << truth_path << "\n";
            return kParseError;
        }
    }
    if (format == "json") {
        std::cout << json{{"curve", curve_path}, {"truth", truth_path}, {"truth_value", truth}}.dump(2) << "\n";
    } else {
        std::cout << "wrote " << curve_path << " and " << truth_path << "\n";
        if (pc.truth.center) std::cout << "center " << pc.truth.center->to_string() << "\n";
        if (pc.truth.axis) std::cout << "axis " << pc.truth.axis->to_string() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetry detection for polynomially parametrized plane curves"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string path;
    auto* detect = app.add_subcommand("detect", "Detect central and mirror symmetry of a curve file");
    detect->add_option("file", path, "Curve file ('-' or omitted: stdin)");
    add_format(detect);

    bool suite = false;
    bool scaling = false;
    std::string suite_name;
    std::vector<int> degrees = {25, 50, 100, 200};
    std::uint64_t seed = 7;
    auto* bench = app.add_subcommand("bench", "Time the listed examples and/or a degree ladder");
    bench->add_option("--suite", suite_name, "Corpus to run")->check(CLI::IsMember({"appendix"}));
    bench->add_flag("--scaling", scaling, "Run the planted degree ladder");
    bench->add_option("--degrees", degrees, "Ladder degrees")->delimiter(',')->check(CLI::Range(2, 10000));
    bench->add_option("--seed", seed, "Ladder seed");
    add_format(bench);

    std::string kind;
    int degree = 0;
    std::uint64_t gen_seed = 1;
    std::string out;
    auto* gen = app.add_subcommand("gen", "Write a curve with a planted symmetry and its truth file");
    gen->add_option("--kind", kind, "Symmetry to plant")->required()->check(CLI::IsMember({"central", "mirror"}));
    gen->add_option("--degree", degree, "Degree of the curve")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", out, "Output path without extension");
    add_format(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParseError;
    }

    try {
        if (*detect) return run_detect(path, format);
        if (*bench) {
            suite = !suite_name.empty();
            if (!suite && !scaling) suite = true;
            return run_bench(suite, scaling, degrees, seed, format);
        }
        if (*gen) return run_gen(kind, degree, gen_seed, out, format);
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
