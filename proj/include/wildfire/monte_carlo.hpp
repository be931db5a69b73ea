#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wildfire/coverage.hpp"
#include "wildfire/fire_geometry.hpp"
#include "wildfire/radius_model.hpp"

namespace wildfire {

/// Rectangle the Poisson field is sampled in. The ignition point is the origin.
struct SimulationWindow {
    Box bounds;
};

/// Bounding box of K(t_max) grown by r_out on every side, then scaled about its
/// center by (1 + margin). Sensors outside it can never reach the front.
SimulationWindow auto_window(const FireGrowthParams& growth, const HybridRadiusModel& radius,
                             double t_max, double margin = 0.1);

struct Sensor {
    Point2 position;
    double radius = 0.0;
};

/// One draw of the Boolean model restricted to a window.
struct BooleanRealization {
    std::vector<Sensor> sensors;
    SimulationWindow window;
    std::uint64_t seed = 0;
};

struct EmpiricalEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Counter-based split: the stream for (master, index) does not depend on how
/// work is distributed.
std::uint64_t realization_seed(std::uint64_t master, std::uint64_t index);

/// N ~ Poisson(lambda |window|) sensors, uniform positions, iid radii.
BooleanRealization sample_realization(const FireScenario& scenario, const SimulationWindow& window,
                                      std::uint64_t seed);

/// True iff some sensor disk meets the front (tangency counts).
bool detected_at(const BooleanRealization& realization, const FireFront& front);

/// Number of sensor disks meeting the front.
std::size_t count_detectors(const BooleanRealization& realization, const FireFront& front);

/// First t in [0, t_max] at which the field meets the growing front, to within
/// 1e-9 s; nullopt when no sensor reaches it by t_max.
std::optional<double> detection_time(const BooleanRealization& realization,
                                     const FireGrowthParams& growth, double t_max);

struct MonteCarloOptions {
    std::size_t realizations = 10000;
    std::uint64_t seed = 1;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Defaults to auto_window over the last grid time.
    std::optional<SimulationWindow> window;
};

/// Empirical p(t): fraction of realizations detected by each grid time, with
/// plug-in binomial standard errors sqrt(p(1-p)/n).
CoverageCurve estimate_sensing_probability(const FireScenario& scenario, std::span<const double> times,
                                           const MonteCarloOptions& options);

CoverageCurve estimate_sensing_probability(const FireScenario& scenario, std::span<const double> times,
                                           std::size_t realizations, std::uint64_t seed);

/// Empirical mean of count_detectors at time t.
EmpiricalEstimate estimate_mean_detectors(const FireScenario& scenario, double t,
                                          const MonteCarloOptions& options);

/// Hit-or-miss estimate of E_r[A({x : dist(x, K) <= r})], one fresh radius
/// per sample point.
EmpiricalEstimate estimate_dilated_area(const FireFront& front, const HybridRadiusModel& radius,
                                        std::size_t samples, std::uint64_t seed, unsigned threads = 0);

/// sqrt(p (1 - p) / n).
double binomial_stderr(double p, std::size_t n);

}  // namespace wildfire
