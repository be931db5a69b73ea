#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wildfire {

/// Thrown when a physical parameter violates its invariant. The message names
/// the violated condition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by pdf_y on a deterministic radius model (no density exists).
class DegenerateModelError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Rng = std::mt19937_64;

/// Uniform double on [0, 1) with 53 random bits; independent of the
/// standard library's distribution implementation.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Decay rate of the truncated exponential tail, in 1/m.
inline constexpr double kTailRate = 1.0;

/// Hybrid sensing range: r = r_in + y, where y follows an exponential law
/// truncated to (0, r_out - r_in]. r_in == r_out gives a fixed disk.
class HybridRadiusModel {
public:
    HybridRadiusModel(double inner, double outer);

    double inner() const noexcept { return inner_; }
    double outer() const noexcept { return outer_; }
    /// r_out - r_in.
    double spread() const noexcept { return outer_ - inner_; }
    bool deterministic() const noexcept { return outer_ == inner_; }

    bool operator==(const HybridRadiusModel&) const = default;

private:
    double inner_;
    double outer_;
};

/// Density of the tail y. Zero outside (0, spread].
double pdf_y(const HybridRadiusModel& model, double y);

/// CDF of the tail y on [0, spread].
double cdf_y(const HybridRadiusModel& model, double y);

/// E[y].
double mean_tail(const HybridRadiusModel& model);
/// E[y^2].
double mean_tail_squared(const HybridRadiusModel& model);

/// E[r] = r_in + E[y].
double mean_r(const HybridRadiusModel& model);

/// E[r^2] = r_in^2 + 2 E[y] (1 + r_in) - R'^2 e^{-R'} / (1 - e^{-R'}).
double mean_r_squared(const HybridRadiusModel& model);

/// Inverse-CDF draw of r. Consumes exactly one 64-bit word from rng, or
/// none when the model is deterministic.
double sample_radius(const HybridRadiusModel& model, Rng& rng);

}  // namespace wildfire
