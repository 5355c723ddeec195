#include "symcurve/bench.hpp"

#include "symcurve/detect.hpp"
#include "symcurve/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace symcurve {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string verdict(const std::optional<bool>& v) {
    if (!v) return "-";
    return *v ? "yes" : "no";
}

// Best of three batches, each repeated until it takes at least 20 ms.
template <typename F>
double time_per_call(F&& f) {
    double best = INFINITY;
    for (int batch = 0; batch < 3; ++batch) {
        int reps = 0;
        const auto t0 = Clock::now();
        double elapsed = 0;
        do {
            f();
            ++reps;
            elapsed = since(t0);
        } while (elapsed < 0.02);
        best = std::min(best, elapsed / reps);
    }
    return best;
}

}  // namespace

std::vector<SuiteRow> run_appendix_suite() {
    std::vector<SuiteRow> rows;
    for (const auto& fx : appendix_corpus()) {
        const Parametrization p = fx.parametrization();
        const auto t0 = Clock::now();
        const SymmetryReport rep = detect_all(p);
        SuiteRow row;
        row.id = fx.id;
        row.seconds = since(t0);
        row.degree = rep.degrees.n;
        std::optional<bool> central, mirror;
        if (rep.central) central = rep.central->symmetric;
        if (rep.mirror) mirror = rep.mirror->symmetric;
        row.central = verdict(central);
        row.mirror = verdict(mirror);
        row.matches = (!fx.expected.central || fx.expected.central == central) &&
                      (!fx.expected.mirror || fx.expected.mirror == mirror);
        rows.push_back(std::move(row));
    }
    return rows;
}

ScalingResult run_scaling(const std::vector<int>& degrees, std::uint64_t seed) {
    ScalingResult out;
    std::vector<double> xs, ys;
    for (int d : degrees) {
        PlantOptions opts;
        opts.a = Rational(1);
        opts.b = Rational(1);
        opts.motion = Motion::rotation(FieldElement(Rational(3, 5)), FieldElement(Rational(4, 5)),
                                       Point{FieldElement(2L), FieldElement(-3L)});
        const PlantedCurve pc = random_planted_mirror(d, seed, opts);
        ScalingPoint pt;
        pt.degree = d;
        const auto t0 = Clock::now();
        const SymmetryReport rep = detect_all(pc.curve);
        pt.detect_seconds = since(t0);
        pt.symmetric = rep.mirror && rep.mirror->symmetric;

        const ComplexCurve curve = to_complex(pc.curve, rep.curve_class);
        const FieldElement beta = mirror_beta(curve);
        pt.kernel_seconds = time_per_call([&] {
            if (verify_system_Wprime(curve, beta))
                throw std::logic_error("planted curve failed the W' kernel");
        });
        xs.push_back(d);
        ys.push_back(pt.kernel_seconds);
        out.points.push_back(pt);
    }
    if (xs.size() >= 2) out.slope = loglog_slope(xs, ys);
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0) throw std::invalid_argument("x values must not all coincide");
    return (n * sxy - sx * sy) / den;
}

}  // namespace symcurve
