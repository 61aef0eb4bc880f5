#pragma once

#include <cstddef>
#include <vector>

#include "densmap/geo.hpp"

namespace densmap {

/// Grid geometry over a bounding box. Rows count south to north, columns
/// west to east; the public cell addressing is 1-based: row 1 is the
/// southernmost row, column 1 the westernmost column.
struct RasterSpec {
    BoundingBox bounds;
    int rows = 0;
    int cols = 0;

    double lat_step() const { return (bounds.north - bounds.south) / rows; }
    double lon_step() const { return (bounds.east - bounds.west) / cols; }
};

RasterSpec make_raster_spec(const BoundingBox& bounds, int rows, int cols);

/// Center of cell (i, j), 1-based. Throws std::out_of_range on bad indices.
GeoPoint cell_center(const RasterSpec& spec, int i, int j);

/// Spherical area in km^2 of any cell in row i (independent of column):
/// R^2 * dlon_rad * (sin lat_top - sin lat_bottom).
double cell_area(const RasterSpec& spec, int i);

/// Cell densities over a grid, row-major with row index varying slowest.
class Raster {
public:
    Raster() = default;
    explicit Raster(const RasterSpec& spec)
        : spec_(spec), values_(static_cast<size_t>(spec.rows) * spec.cols, 0.0) {}
    Raster(const RasterSpec& spec, std::vector<double> values);

    const RasterSpec& spec() const { return spec_; }
    int rows() const { return spec_.rows; }
    int cols() const { return spec_.cols; }

    /// 1-based cell access mirroring cell_center's addressing.
    double at(int i, int j) const { return values_[index(i, j)]; }
    double& at(int i, int j) { return values_[index(i, j)]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double max_value() const;
    double min_value() const;

private:
    size_t index(int i, int j) const;

    RasterSpec spec_;
    std::vector<double> values_;
};

} // namespace densmap
