#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wildfire/coverage.hpp"

namespace wildfire {

/// Malformed config text, unknown keys, or wrong value types. The message
/// carries the line/column or the key path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SweepAxis { Density, Wind, Tau };

std::string_view to_string(SweepAxis axis);

struct TimeGridSpec {
    double start = 0.0;
    /// nullopt runs each model up to its own critical time.
    std::optional<double> stop;
    std::size_t steps = 20;

    bool operator==(const TimeGridSpec&) const = default;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::Wind;
    std::vector<double> values = linear_grid(0.0, 10.0, 11);

    bool operator==(const SweepSpec&) const = default;
};

/// Everything a CLI run needs. Defaults reproduce the reference parameter
/// set: r_in = 2 m, r_out = 4 m, alpha = 0.33 m/s, A_cr = 20 m^2,
/// v_x = 3 m/s, V = 10 m/s.
struct ScenarioConfig {
    FireScenario scenario;
    std::vector<FireModelKind> models{FireModelKind::Circular, FireModelKind::Elliptical,
                                      FireModelKind::Piriform};
    TimeGridSpec time_grid;
    std::size_t realizations = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    SweepSpec sweep;
    /// Empty writes CSV to stdout.
    std::string output;

    /// Throws ParameterError naming the violated invariant.
    void validate() const;

    /// Grid for one model: start..stop, or start..critical_time when stop is unset.
    std::vector<double> times_for(FireModelKind kind) const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses the JSON document. Missing keys keep their defaults. Empty text is
/// the all-defaults config.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical JSON; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

}  // namespace wildfire
