#pragma once

#include <set>

#include "frontiers/png.hpp"
#include "frontiers/submap_graph.hpp"

namespace frontiers {

/// Overlay inputs for one rendered frame. Queried submaps tint their AABB
/// region red, frontier points draw red, navigation points blue discs, the
/// trajectory a blue polyline (the Fig. 1 color convention).
struct RenderOverlays {
  std::set<int> queried_submaps;
  std::vector<Eigen::Vector2d> frontier_points;
  std::vector<Eigen::Vector2d> nav_points;
  std::vector<Eigen::Vector2d> trajectory;
};

/// Fused map as grayscale (Free white, Occupied black, Unknown gray) with
/// the overlays on top. Image row 0 is the max-y edge of the map.
Image render_map(const OccupancyGrid& fused, const SubmapGraph& graph,
                 const RenderOverlays& overlays);

/// Pixel coordinates of a world point in the rendered image.
Eigen::Vector2i render_pixel(const OccupancyGrid& fused, const Eigen::Vector2d& world);

}  // namespace frontiers
