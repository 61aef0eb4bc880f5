#include "densmap/geo.hpp"

#include <cmath>

namespace densmap {

double normalize_lon(double lon_deg) {
    double l = std::fmod(lon_deg + 180.0, 360.0);
    if (l < 0.0)
        l += 360.0;
    return l - 180.0;
}

GeoPoint make_geo_point(double lat_deg, double lon_deg) {
    if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg))
        throw std::invalid_argument("geo point: coordinates must be finite");
    if (lat_deg < -90.0 || lat_deg > 90.0)
        throw std::invalid_argument("geo point: latitude out of [-90, 90]");
    return GeoPoint{lat_deg, normalize_lon(lon_deg)};
}

BoundingBox make_bounding_box(double south, double north, double west, double east) {
    if (!std::isfinite(south) || !std::isfinite(north) || !std::isfinite(west) || !std::isfinite(east))
        throw std::invalid_argument("bounding box: bounds must be finite");
    if (south < -90.0 || north > 90.0)
        throw std::invalid_argument("bounding box: latitude bounds out of [-90, 90]");
    if (west < -180.0 || east > 180.0)
        throw std::invalid_argument("bounding box: longitude bounds out of [-180, 180]");
    if (!(south < north))
        throw std::invalid_argument("bounding box: south must be < north");
    if (!(west < east))
        throw std::invalid_argument("bounding box: west must be < east");
    return BoundingBox{south, north, west, east};
}

double great_circle_distance(const GeoPoint& a, const GeoPoint& b) {
    // Absolute differences keep the formula exactly order-insensitive.
    const double dlat_half = std::fabs(a.lat - b.lat) * kDegToRad * 0.5;
    const double dlon_half = std::fabs(a.lon - b.lon) * kDegToRad * 0.5;
    const double sl = std::sin(dlat_half);
    const double sn = std::sin(dlon_half);
    const double h = sl * sl + std::cos(a.lat * kDegToRad) * std::cos(b.lat * kDegToRad) * sn * sn;
    const double root = std::sqrt(h < 0.0 ? 0.0 : (h > 1.0 ? 1.0 : h));
    return 2.0 * kEarthRadiusKm * std::asin(root);
}

} // namespace densmap
