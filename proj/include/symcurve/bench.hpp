#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcurve {

struct SuiteRow {
    std::string id;
    int degree = 0;
    double seconds = 0;
    /// "yes", "no" or "-" when the detector did not run.
    std::string central;
    std::string mirror;
    /// Verdicts agree with the listed ones.
    bool matches = false;
};

/// detect_all on every listed example, in corpus order.
std::vector<SuiteRow> run_appendix_suite();

struct ScalingPoint {
    int degree = 0;
    /// Seconds per call of the W' verification kernel.
    double kernel_seconds = 0;
    /// One full detect_all, parse excluded.
    double detect_seconds = 0;
    bool symmetric = false;
};

struct ScalingResult {
    std::vector<ScalingPoint> points;
    /// Least-squares slope of log(kernel_seconds) against log(degree).
    double slope = 0;
};

/// Planted mirror-symmetric curves, one per degree, all built with the same
/// recipe (t -> t + 1, rotation (3/5, 4/5), translation (2, -3)).
ScalingResult run_scaling(const std::vector<int>& degrees, std::uint64_t seed);

/// Least-squares slope of log y against log x. Needs two distinct x values.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace symcurve
