#pragma once

#include <stdexcept>

namespace densmap {

// IUGG mean Earth radius, km.
inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kDegToRad = kPi / 180.0;

/// Latitude/longitude pair in degrees. lat in [-90, +90],
/// lon normalized into [-180, +180).
struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

struct BoundingBox {
    double south = 0.0;
    double north = 0.0;
    double west = 0.0;
    double east = 0.0;
};

/// Wraps a longitude into [-180, +180). +180 maps to -180.
double normalize_lon(double lon_deg);

/// Validating constructor: throws std::invalid_argument on non-finite or
/// out-of-range latitude; longitude is normalized.
GeoPoint make_geo_point(double lat_deg, double lon_deg);

/// Throws std::invalid_argument unless south < north, west < east and all
/// four values are finite and in range (no antimeridian-spanning boxes).
BoundingBox make_bounding_box(double south, double north, double west, double east);

/// Great-circle distance in km on a sphere of radius kEarthRadiusKm,
/// haversine formula. Symmetric in its arguments by construction.
double great_circle_distance(const GeoPoint& a, const GeoPoint& b);

} // namespace densmap
