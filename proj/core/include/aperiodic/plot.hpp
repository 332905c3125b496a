#pragma once

#include "aperiodic/delone.hpp"
#include "aperiodic/forced.hpp"
#include "aperiodic/point_cloud.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aperiodic {

/// One horizontal row of ticks per 1-D cloud, on a shared axis.
std::string svg_tick_rows(const std::vector<std::pair<std::string, PointCloud>>& rows);

struct PatchHighlight {
    std::size_t center = 0;
    Rational radius;
};

/// Dots for a 2-D cloud, with optional patch circles. Throws for other dimensions.
std::string svg_cloud_2d(const PointCloud& s, const std::vector<PatchHighlight>& highlights = {});

/// Newton polygons side by side, with outward normals drawn at edge midpoints.
std::string svg_newton_polygons(const std::vector<NewtonPolygon>& polygons);

/// "T,N,bound,triggered" rows; the bound column is T / (2 R) as p/q.
std::string lagarias_csv(const LagariasReport& r);

}  // namespace aperiodic
