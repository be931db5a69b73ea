#include "wildfire/radius_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wildfire {

namespace {

// The moment formulas below are written for a unit tail rate.
static_assert(kTailRate == 1.0);

// Below this spread the closed forms lose digits to cancellation; use the
// Maclaurin series instead.
constexpr double kSeriesCutoff = 1e-3;

// e^{-x} / (1 - e^{-x}) = 1 / (e^x - 1)
double tail_ratio(double x) { return 1.0 / std::expm1(x); }

}  // namespace

HybridRadiusModel::HybridRadiusModel(double inner, double outer)
    : inner_(inner), outer_(outer) {
    if (!(std::isfinite(inner) && std::isfinite(outer))) {
        throw ParameterError("radius model: r_in and r_out must be finite");
    }
    if (!(inner >= 0.0)) {
        throw ParameterError("radius model: 0 <= r_in violated (r_in = " + std::to_string(inner) + ")");
    }
    if (!(inner <= outer)) {
        throw ParameterError("radius model: r_in <= r_out violated (r_in = " + std::to_string(inner) +
                             ", r_out = " + std::to_string(outer) + ")");
    }
}

double pdf_y(const HybridRadiusModel& model, double y) {
    const double spread = model.spread();
    if (model.deterministic()) {
        throw DegenerateModelError("pdf_y: r_in == r_out, the tail is a point mass at 0");
    }
    if (!(y > 0.0 && y <= spread)) {
        return 0.0;
    }
    return kTailRate * std::exp(-kTailRate * y) / -std::expm1(-kTailRate * spread);
}

double cdf_y(const HybridRadiusModel& model, double y) {
    const double spread = model.spread();
    if (model.deterministic()) {
        return y >= 0.0 ? 1.0 : 0.0;
    }
    if (y <= 0.0) return 0.0;
    if (y >= spread) return 1.0;
    return std::expm1(-kTailRate * y) / std::expm1(-kTailRate * spread);
}

double mean_tail(const HybridRadiusModel& model) {
    const double x = model.spread() * kTailRate;
    if (x == 0.0) return 0.0;
    if (x < kSeriesCutoff) {
        const double x2 = x * x;
        return x / 2 - x2 / 12 + x2 * x2 / 720 - x2 * x2 * x2 / 30240;
    }
    return 1.0 - x * tail_ratio(x);
}

double mean_tail_squared(const HybridRadiusModel& model) {
    const double x = model.spread() * kTailRate;
    if (x == 0.0) return 0.0;
    if (x < kSeriesCutoff) {
        const double x2 = x * x;
        const double x4 = x2 * x2;
        return x2 / 3 - x2 * x / 12 + x4 / 360 + x4 * x / 720 - x4 * x2 / 15120;
    }
    return 2.0 - (x * x + 2 * x + 2) * std::exp(-x) / -std::expm1(-x);
}

double mean_r(const HybridRadiusModel& model) { return model.inner() + mean_tail(model); }

double mean_r_squared(const HybridRadiusModel& model) {
    const double r_in = model.inner();
    const double spread = model.spread();
    if (spread * kTailRate < kSeriesCutoff) {
        return r_in * r_in + 2 * r_in * mean_tail(model) + mean_tail_squared(model);
    }
    return r_in * r_in + 2 * mean_tail(model) * (1.0 + r_in) - spread * spread * tail_ratio(spread);
}

double sample_radius(const HybridRadiusModel& model, Rng& rng) {
    if (model.deterministic()) {
        return model.inner();
    }
    // u in (0, 1]; u == 1 maps to y == spread (the closed end of the support).
    const double u = 1.0 - uniform01(rng);
    const double y = -std::log1p(u * std::expm1(-kTailRate * model.spread())) / kTailRate;
    const double r = std::min(model.inner() + y, model.outer());
    return std::max(r, std::nextafter(model.inner(), std::numeric_limits<double>::infinity()));
}

}  // namespace wildfire
