#include "wildfire/fire_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wildfire {

namespace {

constexpr double kPi = std::numbers::pi;

// max |cos phi (1 + sin phi)|, attained at sin phi = 1/2
const double kPiriformHalfWidth = 3.0 * std::sqrt(3.0) / 4.0;

std::string num(double v) { return std::to_string(v); }

// Distance from (u, v), u, v >= 0, to the ellipse x^2/a^2 + y^2/b^2 <= 1
// with a >= b. The closest boundary point (a cos phi, b sin phi) lies in the
// first quadrant and solves g(phi) = 0 with g(0) <= 0 <= g(pi/2).
double ellipse_distance(double a, double b, double u, double v) {
    if (b == 0.0) {
        return std::hypot(std::max(u - a, 0.0), v);
    }
    if ((u / a) * (u / a) + (v / b) * (v / b) <= 1.0) {
        return 0.0;
    }
    if (a == b) {
        return std::hypot(u, v) - a;
    }
    const double c = b * b - a * a;
    auto g = [&](double phi) {
        return c * std::sin(phi) * std::cos(phi) + a * u * std::sin(phi) - b * v * std::cos(phi);
    };
    auto dg = [&](double phi) {
        return c * std::cos(2 * phi) + a * u * std::cos(phi) + b * v * std::sin(phi);
    };

    double lo = 0.0;
    double hi = kPi / 2;
    double phi = std::atan2(a * v, b * u);
    for (int iter = 0; iter < 100; ++iter) {
        const double gv = g(phi);
        if (gv == 0.0) break;
        if (gv < 0.0) {
            lo = phi;
        } else {
            hi = phi;
        }
        double next = phi - gv / dg(phi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const bool converged = std::abs(next - phi) < 1e-15 || hi - lo < 1e-15;
        phi = next;
        if (converged) break;
    }
    return std::hypot(a * std::cos(phi) - u, b * std::sin(phi) - v);
}

double piriform_distance_sq(double a, double b, Point2 p, double phi) {
    const Point2 q = piriform_point(a, b, phi);
    return (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
}

// Coarse scan of the upper half boundary (phi in [-pi/2, pi/2]) followed by
// golden-section refinement of the best discrete local minima.
double piriform_distance(double a, double b, Point2 p) {
    constexpr int kScan = 128;
    constexpr int kRefine = 3;
    const Point2 q{p.x, std::abs(p.y)};
    const double step = kPi / kScan;

    std::array<double, kScan + 1> d2{};
    for (int i = 0; i <= kScan; ++i) {
        d2[i] = piriform_distance_sq(a, b, q, -kPi / 2 + i * step);
    }

    std::array<std::pair<double, int>, kScan + 1> minima{};
    int n_minima = 0;
    for (int i = 0; i <= kScan; ++i) {
        const bool left = i == 0 || d2[i] <= d2[i - 1];
        const bool right = i == kScan || d2[i] <= d2[i + 1];
        if (left && right) minima[n_minima++] = {d2[i], i};
    }
    std::partial_sort(minima.begin(), minima.begin() + std::min(n_minima, kRefine),
                      minima.begin() + n_minima);

    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double best = minima[0].first;
    for (int k = 0; k < std::min(n_minima, kRefine); ++k) {
        const int i = minima[k].second;
        double lo = -kPi / 2 + std::max(i - 1, 0) * step;
        double hi = -kPi / 2 + std::min(i + 1, kScan) * step;
        double x1 = hi - inv_golden * (hi - lo);
        double x2 = lo + inv_golden * (hi - lo);
        double f1 = piriform_distance_sq(a, b, q, x1);
        double f2 = piriform_distance_sq(a, b, q, x2);
        while (hi - lo > 1e-12) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_golden * (hi - lo);
                f1 = piriform_distance_sq(a, b, q, x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_golden * (hi - lo);
                f2 = piriform_distance_sq(a, b, q, x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return std::sqrt(best);
}

}  // namespace

std::string_view to_string(FireModelKind kind) {
    switch (kind) {
        case FireModelKind::Circular: return "circular";
        case FireModelKind::Elliptical: return "elliptical";
        case FireModelKind::Piriform: return "piriform";
    }
    return "unknown";
}

FireModelKind parse_fire_model(std::string_view name) {
    if (name == "circular") return FireModelKind::Circular;
    if (name == "elliptical") return FireModelKind::Elliptical;
    if (name == "piriform") return FireModelKind::Piriform;
    throw ParameterError("unknown fire model '" + std::string(name) +
                         "' (expected circular, elliptical or piriform)");
}

void FireGrowthParams::validate() const {
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw ParameterError("growth: alpha > 0 violated (alpha = " + num(alpha) + ")");
    }
    if (!(std::isfinite(scale_speed) && scale_speed > 0.0)) {
        throw ParameterError("growth: V > 0 violated (scale_speed = " + num(scale_speed) + ")");
    }
    if (!(std::isfinite(wind_x) && wind_x >= 0.0)) {
        throw ParameterError("growth: v_x >= 0 violated (wind_x = " + num(wind_x) + ")");
    }
    if (wind_y != 0.0) {
        throw ParameterError("growth: v_y == 0 violated (wind_y = " + num(wind_y) + ")");
    }
}

double FireGrowthParams::elongation() const {
    return kind == FireModelKind::Circular ? 1.0 : 1.0 + wind_x / scale_speed;
}

void FireFront::validate() const {
    if (!(std::isfinite(major) && std::isfinite(minor) && minor >= 0.0 && major >= minor)) {
        throw ParameterError("front: major >= minor >= 0 violated (major = " + num(major) +
                             ", minor = " + num(minor) + ")");
    }
    if (kind == FireModelKind::Circular && major != minor) {
        throw ParameterError("front: circular front needs major == minor");
    }
}

FireFront front_at(const FireGrowthParams& params, double t) {
    params.validate();
    if (!(t >= 0.0)) {
        throw ParameterError("front_at: t >= 0 violated (t = " + num(t) + ")");
    }
    const double base = params.alpha * t;
    return FireFront{params.kind, base * params.elongation(), base, t};
}

double area(const FireFront& front) { return kPi * front.major * front.minor; }

double perimeter(const FireFront& front) {
    const double a = front.major;
    const double b = front.minor;
    switch (front.kind) {
        case FireModelKind::Circular:
            return 2 * kPi * a;
        case FireModelKind::Elliptical:
            return kPi * (3 * (a + b) - std::sqrt((3 * a + b) * (a + 3 * b)));
        case FireModelKind::Piriform: {
            if (a == 0.0) return 0.0;
            auto speed = [a, b](double phi) {
                const double dx = a * std::cos(phi);
                const double dy = b * (std::cos(2 * phi) - std::sin(phi));
                return std::hypot(dx, dy);
            };
            // The curve is symmetric about the x axis; the upper half runs from
            // the cusp (phi = -pi/2) to the tip (phi = pi/2).
            using boost::math::quadrature::gauss_kronrod;
            return 2 * gauss_kronrod<double, 31>::integrate(speed, -kPi / 2, kPi / 2, 15,
                                                            kPiriformPerimeterTolerance);
        }
    }
    return 0.0;
}

Point2 piriform_point(double major, double minor, double phi) {
    const double lobe = 1.0 + std::sin(phi);
    return {major * lobe, minor * std::cos(phi) * lobe};
}

bool contains(const FireFront& front, Point2 p) {
    const double a = front.major;
    const double b = front.minor;
    switch (front.kind) {
        case FireModelKind::Circular:
            return p.x * p.x + p.y * p.y <= a * a;
        case FireModelKind::Elliptical: {
            if (b == 0.0) return p.y == 0.0 && p.x >= 0.0 && p.x <= 2 * a;
            const double u = (p.x - a) / a;
            const double v = p.y / b;
            return u * u + v * v <= 1.0;
        }
        case FireModelKind::Piriform: {
            if (a == 0.0) return p.x == 0.0 && p.y == 0.0;
            // Vertical slice at s = sin phi: |y| <= b sqrt(1 - s^2) (1 + s).
            const double s = p.x / a - 1.0;
            if (s < -1.0 || s > 1.0) return false;
            return std::abs(p.y) <= b * std::sqrt(std::max(0.0, 1.0 - s * s)) * (1.0 + s);
        }
    }
    return false;
}

double distance_to(const FireFront& front, Point2 p) {
    const double a = front.major;
    const double b = front.minor;
    switch (front.kind) {
        case FireModelKind::Circular:
            return std::max(std::hypot(p.x, p.y) - a, 0.0);
        case FireModelKind::Elliptical:
            return ellipse_distance(a, b, std::abs(p.x - a), std::abs(p.y));
        case FireModelKind::Piriform:
            if (a == 0.0 || b == 0.0) {
                return std::hypot(std::max({-p.x, p.x - 2 * a, 0.0}), p.y);
            }
            if (contains(front, p)) return 0.0;
            return piriform_distance(a, b, p);
    }
    return 0.0;
}

Box bounding_box(const FireFront& front) {
    const double a = front.major;
    const double b = front.minor;
    switch (front.kind) {
        case FireModelKind::Circular:
            return {-a, a, -a, a};
        case FireModelKind::Elliptical:
            return {0.0, 2 * a, -b, b};
        case FireModelKind::Piriform:
            return {0.0, 2 * a, -kPiriformHalfWidth * b, kPiriformHalfWidth * b};
    }
    return {};
}

double dilated_area(const FireFront& front, double r) {
    if (!(r >= 0.0)) {
        throw ParameterError("dilated_area: r >= 0 violated (r = " + num(r) + ")");
    }
    return area(front) + perimeter(front) * r + kPi * r * r;
}

double expected_dilated_area(const FireFront& front, const HybridRadiusModel& radius) {
    return area(front) + perimeter(front) * mean_r(radius) + kPi * mean_r_squared(radius);
}

}  // namespace wildfire
