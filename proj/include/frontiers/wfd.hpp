#pragma once

#include <optional>
#include <vector>

#include "frontiers/grid.hpp"

namespace frontiers {

/// Cell connectivity used for free-space traversal and frontier adjacency.
/// The usual WFD choice is eight-connected.
enum class Connectivity { Four = 4, Eight = 8 };

/// A frontier cell of one submap, in submap-local raster coordinates:
/// Free in the (inflated) source grid with at least one Unknown neighbor.
struct FrontierPoint {
  Cell cell;
};

/// The frontier cells of one submap, submap-local, sorted by (cy, cx) and
/// duplicate-free.
struct LocalFrontierSet {
  int submap_id = -1;
  std::vector<Cell> points;

  bool contains(const Cell& c) const;
  std::size_t size() const { return points.size(); }
};

/// Wavefront Frontier Detector over an already-inflated grid: an outer BFS
/// over Free space from `seed`; whenever it meets a frontier cell, an inner
/// BFS extracts the whole contiguous frontier segment. Returns exactly the
/// Free cells that are reachable from the seed through connected Free cells
/// and adjacent to at least one Unknown cell.
///
/// Throws if the seed is out of bounds or not Free.
LocalFrontierSet detect_local_frontiers(const OccupancyGrid& grid, const Cell& seed,
                                        Connectivity conn = Connectivity::Eight,
                                        int submap_id = -1);

bool is_frontier_cell(const OccupancyGrid& grid, const Cell& c, Connectivity conn);

/// Nearest Free cell to `preferred` within `max_radius` (Euclidean, cells),
/// or nullopt. Used to recover a detection seed when inflation swallowed
/// the robot's own cell.
std::optional<Cell> find_free_seed(const OccupancyGrid& grid, const Cell& preferred,
                                   int max_radius);

}  // namespace frontiers
