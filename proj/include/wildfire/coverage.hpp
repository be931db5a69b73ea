#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wildfire/fire_geometry.hpp"
#include "wildfire/radius_model.hpp"

namespace wildfire {

/// Sensor field and fire parameters. Units: 1/m^2, m, m/s, m^2.
struct FireScenario {
    double density = 0.05;
    HybridRadiusModel radius{2.0, 4.0};
    FireGrowthParams growth{};
    double critical_area = 20.0;
    double tau = 0.9;

    /// Throws ParameterError naming the violated invariant.
    void validate() const;

    /// Copy with a different model kind.
    FireScenario with_kind(FireModelKind kind) const;
    FireScenario with_density(double lambda) const;

    bool operator==(const FireScenario&) const = default;
};

enum class CurveKind { Analytic, Empirical };

/// Sensing probability over time. Empirical curves carry standard errors and
/// the realization count.
struct CoverageCurve {
    CurveKind kind = CurveKind::Analytic;
    std::vector<double> times;
    std::vector<double> probabilities;
    std::vector<double> stderrs;
    std::size_t realizations = 0;

    std::size_t size() const { return times.size(); }
};

/// N(K(t)) = lambda E[A(K(t) + S)], the mean number of sensors whose range
/// meets the fire at time t.
double mean_detectors(const FireScenario& scenario, double t);

/// p(t) = 1 - exp(-N(K(t))).
double sensing_probability(const FireScenario& scenario, double t);

/// Time at which the front area reaches the critical area.
double critical_time(const FireScenario& scenario);

/// p(t_cr).
double detection_probability(const FireScenario& scenario);

/// Density at which detection_probability equals tau, from the per-model
/// closed forms of E[A(K(t_cr) + S)].
double critical_density(const FireScenario& scenario);

/// p(t) on a sorted, non-negative time grid.
CoverageCurve coverage_curve(const FireScenario& scenario, std::span<const double> times);

/// `steps` evenly spaced points from start to stop inclusive (a single point
/// when steps == 1, empty when steps == 0).
std::vector<double> linear_grid(double start, double stop, std::size_t steps);

}  // namespace wildfire
