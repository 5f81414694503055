#pragma once

#include <optional>
#include <vector>

#include "frontiers/grid.hpp"

namespace frontiers::sim {

/// Shortest 8-connected path over non-Occupied cells of an (already
/// inflated) grid, A* with the octile heuristic. Unknown cells traverse —
/// navigation targets are frontier cells, so the last stretch necessarily
/// crosses space no submap has observed yet; only observed obstacles block.
/// Waypoints are cell centers in the grid's parent frame, start through
/// goal inclusive. Targets on Occupied cells or cut off by them return
/// nullopt; a start on a non-Free cell is a precondition violation.
std::optional<std::vector<Eigen::Vector2d>> plan_path(const OccupancyGrid& inflated,
                                                      const Pose2D& from,
                                                      const Eigen::Vector2d& to);

/// Metric length of a waypoint polyline.
double path_length(const std::vector<Eigen::Vector2d>& waypoints);

}  // namespace frontiers::sim
