#include "wildfire/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wildfire {

namespace {

constexpr double kPi = std::numbers::pi;

// log(1 / (1 - tau))
double required_mean_count(double tau) { return -std::log1p(-tau); }

}  // namespace

void FireScenario::validate() const {
    if (!(std::isfinite(density) && density >= 0.0)) {
        throw ParameterError("scenario: lambda >= 0 violated (density = " + std::to_string(density) + ")");
    }
    if (!(std::isfinite(critical_area) && critical_area > 0.0)) {
        throw ParameterError("scenario: A_cr > 0 violated (critical_area = " +
                             std::to_string(critical_area) + ")");
    }
    if (!(tau > 0.0 && tau < 1.0)) {
        throw ParameterError("scenario: 0 < tau < 1 violated (tau = " + std::to_string(tau) + ")");
    }
    growth.validate();
}

FireScenario FireScenario::with_kind(FireModelKind kind) const {
    FireScenario copy = *this;
    copy.growth.kind = kind;
    return copy;
}

FireScenario FireScenario::with_density(double lambda) const {
    FireScenario copy = *this;
    copy.density = lambda;
    return copy;
}

double mean_detectors(const FireScenario& scenario, double t) {
    return scenario.density * expected_dilated_area(front_at(scenario.growth, t), scenario.radius);
}

double sensing_probability(const FireScenario& scenario, double t) {
    return -std::expm1(-mean_detectors(scenario, t));
}

double critical_time(const FireScenario& scenario) {
    scenario.validate();
    // pi (alpha t)^2 elongation = A_cr
    return std::sqrt(scenario.critical_area / (kPi * scenario.growth.elongation())) /
           scenario.growth.alpha;
}

double detection_probability(const FireScenario& scenario) {
    return sensing_probability(scenario, critical_time(scenario));
}

double critical_density(const FireScenario& scenario) {
    scenario.validate();
    const double a_cr = scenario.critical_area;
    const double mean = mean_r(scenario.radius);
    const double mean_sq = mean_r_squared(scenario.radius);

    double dilated = 0.0;
    switch (scenario.growth.kind) {
        case FireModelKind::Circular:
            dilated = a_cr + 2 * std::sqrt(kPi * a_cr) * mean + kPi * mean_sq;
            break;
        case FireModelKind::Elliptical: {
            const double w = scenario.growth.wind_x / scenario.growth.scale_speed;
            const double shape = 3 * (2 + w) - std::sqrt((4 + 3 * w) * (4 + w));
            dilated = a_cr + std::sqrt(kPi * a_cr / (1 + w)) * shape * mean + kPi * mean_sq;
            break;
        }
        case FireModelKind::Piriform: {
            const FireFront at_critical = front_at(scenario.growth, critical_time(scenario));
            dilated = a_cr + perimeter(at_critical) * mean + kPi * mean_sq;
            break;
        }
    }
    return required_mean_count(scenario.tau) / dilated;
}

CoverageCurve coverage_curve(const FireScenario& scenario, std::span<const double> times) {
    if (!std::is_sorted(times.begin(), times.end())) {
        throw ParameterError("coverage_curve: time grid must be sorted");
    }
    if (!times.empty() && !(times.front() >= 0.0)) {
        throw ParameterError("coverage_curve: time grid must be non-negative");
    }
    CoverageCurve curve;
    curve.kind = CurveKind::Analytic;
    curve.times.assign(times.begin(), times.end());
    curve.probabilities.reserve(times.size());
    for (const double t : times) {
        curve.probabilities.push_back(sensing_probability(scenario, t));
    }
    return curve;
}

std::vector<double> linear_grid(double start, double stop, std::size_t steps) {
    std::vector<double> grid;
    if (steps == 0) return grid;
    if (steps == 1) return {start};
    grid.reserve(steps);
    const double span = stop - start;
    for (std::size_t i = 0; i < steps; ++i) {
        grid.push_back(i + 1 == steps ? stop : start + span * static_cast<double>(i) / (steps - 1));
    }
    return grid;
}

}  // namespace wildfire
