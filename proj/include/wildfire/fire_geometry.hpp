#pragma once

#include <string>
#include <string_view>

#include "wildfire/radius_model.hpp"

namespace wildfire {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

enum class FireModelKind { Circular, Elliptical, Piriform };

std::string_view to_string(FireModelKind kind);
/// Accepts "circular", "elliptical", "piriform". Throws ParameterError otherwise.
FireModelKind parse_fire_model(std::string_view name);

/// Growth law of the fire front. Speeds in m/s.
///
/// The front grows linearly: the along-wind scale is alpha t (1 + wind_x / scale_speed)
/// and the cross-wind scale is alpha t. Cross wind is carried for completeness and
/// must stay zero. The circular kind ignores wind_x.
struct FireGrowthParams {
    double alpha = 0.33;
    double wind_x = 3.0;
    double wind_y = 0.0;
    double scale_speed = 10.0;
    FireModelKind kind = FireModelKind::Elliptical;

    /// Throws ParameterError naming the violated invariant.
    void validate() const;

    /// 1 + wind_x / scale_speed for the wind-driven kinds, 1 for circular.
    double elongation() const;

    bool operator==(const FireGrowthParams&) const = default;
};

/// Snapshot of the burned set K(t).
///
/// Anchoring, with the ignition point at the origin and wind toward +x:
///  - Circular: disk of radius `major` centered at the origin.
///  - Elliptical: ellipse with semi-axes (major, minor) centered at (major, 0),
///    so its upwind vertex sits on the ignition point.
///  - Piriform: x = major (1 + sin phi), y = minor cos phi (1 + sin phi), cusp at
///    the origin.
struct FireFront {
    FireModelKind kind = FireModelKind::Circular;
    double major = 0.0;
    double minor = 0.0;
    double time = 0.0;

    /// Throws ParameterError unless major >= minor >= 0 (and major == minor for circular).
    void validate() const;

    bool operator==(const FireFront&) const = default;
};

/// Axis-aligned box.
struct Box {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    bool contains(Point2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

/// Front at time t >= 0. Throws ParameterError for negative t or invalid params.
FireFront front_at(const FireGrowthParams& params, double t);

double area(const FireFront& front);

/// Circular: exact. Elliptical: Ramanujan's first approximation. Piriform:
/// arc length of the parametrization by adaptive Gauss-Kronrod quadrature
/// (relative tolerance kPiriformPerimeterTolerance).
double perimeter(const FireFront& front);

inline constexpr double kPiriformPerimeterTolerance = 1e-8;

/// Point of the piriform boundary at parameter phi.
Point2 piriform_point(double major, double minor, double phi);

/// Closed set membership; the boundary is inside.
bool contains(const FireFront& front, Point2 p);

/// Euclidean distance from p to K(t); zero inside.
double distance_to(const FireFront& front, Point2 p);

/// Tight bounding box of K(t).
Box bounding_box(const FireFront& front);

/// Steiner area of K(t) dilated by a disk of radius r >= 0:
/// area + perimeter r + pi r^2. Exact for convex fronts.
double dilated_area(const FireFront& front, double r);

/// E over the radius law of dilated_area: area + perimeter E[r] + pi E[r^2].
double expected_dilated_area(const FireFront& front, const HybridRadiusModel& radius);

}  // namespace wildfire
