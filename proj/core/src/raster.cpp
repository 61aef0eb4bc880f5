#include "densmap/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace densmap {

RasterSpec make_raster_spec(const BoundingBox& bounds, int rows, int cols) {
    make_bounding_box(bounds.south, bounds.north, bounds.west, bounds.east);
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("raster spec: rows and cols must be >= 1");
    return RasterSpec{bounds, rows, cols};
}

static void check_row(const RasterSpec& spec, int i) {
    if (i < 1 || i > spec.rows)
        throw std::out_of_range("raster: row index " + std::to_string(i) + " out of 1.." +
                                std::to_string(spec.rows));
}

static void check_col(const RasterSpec& spec, int j) {
    if (j < 1 || j > spec.cols)
        throw std::out_of_range("raster: col index " + std::to_string(j) + " out of 1.." +
                                std::to_string(spec.cols));
}

GeoPoint cell_center(const RasterSpec& spec, int i, int j) {
    check_row(spec, i);
    check_col(spec, j);
    const double lat = spec.bounds.south + (i - 0.5) * (spec.bounds.north - spec.bounds.south) / spec.rows;
    const double lon = spec.bounds.west + (j - 0.5) * (spec.bounds.east - spec.bounds.west) / spec.cols;
    return GeoPoint{lat, lon};
}

double cell_area(const RasterSpec& spec, int i) {
    check_row(spec, i);
    const double lat_bottom = spec.bounds.south + (i - 1) * (spec.bounds.north - spec.bounds.south) / spec.rows;
    const double lat_top = spec.bounds.south + i * (spec.bounds.north - spec.bounds.south) / spec.rows;
    const double dlon_rad = (spec.bounds.east - spec.bounds.west) / spec.cols * kDegToRad;
    return kEarthRadiusKm * kEarthRadiusKm * dlon_rad *
           (std::sin(lat_top * kDegToRad) - std::sin(lat_bottom * kDegToRad));
}

Raster::Raster(const RasterSpec& spec, std::vector<double> values) : spec_(spec), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(spec.rows) * spec.cols)
        throw std::invalid_argument("raster: value count does not match rows*cols");
}

size_t Raster::index(int i, int j) const {
    check_row(spec_, i);
    check_col(spec_, j);
    return static_cast<size_t>(i - 1) * spec_.cols + (j - 1);
}

double Raster::max_value() const {
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

double Raster::min_value() const {
    return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

} // namespace densmap
