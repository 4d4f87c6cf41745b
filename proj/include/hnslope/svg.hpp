#pragma once

// Deterministic SVG rendering of concave polygons.

#include <string>
#include <utility>
#include <vector>

#include "hnslope/polygon.hpp"

namespace hnslope {

using LabeledPolygon = std::pair<std::string, ConcavePolygon>;

/// 800×600 viewport, axes, one polyline per polygon and a legend in input order.
/// Coordinates are exact rationals rounded to the 1/1000 grid.
/// Throws InvalidArgument for an empty list.
std::string plot_polygons(const std::vector<LabeledPolygon>& polygons);

/// Writes `plot_polygons` to `path`; throws IoError.
void write_svg(const std::vector<LabeledPolygon>& polygons, const std::string& path);

}  // namespace hnslope
