#pragma once

#include <Eigen/Geometry>
#include <map>
#include <set>
#include <vector>

#include "frontiers/grid.hpp"
#include "frontiers/wfd.hpp"

namespace frontiers {

/// One posed submap: a small occupancy grid built from consecutive scans,
/// rigid internally, placed in the world by graph optimization. The raw and
/// inflated grids share the same submap-local origin; `local_frontiers` is
/// detected once on the inflated grid when the submap is finished and never
/// recomputed afterwards.
struct Submap {
  int id = -1;
  OccupancyGrid raw;
  OccupancyGrid inflated;
  Pose2D current_pose;                 // CP: submap frame in world, after the last optimization
  Pose2D previous_pose;                // PP: submap frame in world, before it
  PoseDelta cumulative_deviation;      // CD: Direct-method accumulator
  LocalFrontierSet local_frontiers;    // submap-local cells
  Cell detection_seed{-1, -1};         // seed used for frontier detection (for audits)
  bool finished = false;

  // Observed (non-Unknown) raw cells, extracted once for fast fusion.
  std::vector<std::pair<Cell, float>> observed_cells;

  void cache_observed_cells();

  /// World position of a submap-local frontier cell's center under CP.
  /// cell_center_world lands in the submap frame (the grid origin's parent).
  Eigen::Vector2d frontier_world(const Cell& c) const {
    return current_pose * raw.cell_center_world(c);
  }
};

/// Tight world-frame AABB of the submap raster under its current pose.
Eigen::AlignedBox2d bounding_box(const Submap& submap);

/// Surviving global frontiers, keyed by owning submap id; cells are stored
/// submap-local so optimization-corrected poses re-anchor them for free.
using GlobalFrontierSet = std::map<int, std::vector<Cell>>;

/// All submaps, their world-frame AABBs (kept in sync with the current
/// poses), and the current global frontier set. Single-writer: pose updates
/// and queries are serialized by the caller.
class SubmapGraph {
 public:
  /// Takes ownership; ids must arrive as 0, 1, 2, ... (creation == finish
  /// order, which fusion uses as recency).
  int add_submap(Submap submap);

  int count() const { return static_cast<int>(submaps_.size()); }
  bool has(int id) const { return id >= 0 && id < count(); }
  const Submap& submap(int id) const;
  Submap& submap(int id);

  const Eigen::AlignedBox2d& box(int id) const;

  /// Updates CP and the cached box.
  void set_current_pose(int id, const Pose2D& pose);
  void recompute_boxes();

  /// Ids of all other submaps whose AABB overlaps (closed intervals —
  /// touching edges count) the AABB of `id`.
  std::set<int> intersecting_submaps(int id) const;

  /// Lifts the local frontiers of submap `id` to global status: a point
  /// survives iff in every intersecting submap its world position lands
  /// out of bounds, on an Unknown cell, or on a member of that submap's
  /// own local frontier set (inflated grids throughout). The survivors
  /// replace this submap's entries in the global frontier set.
  std::vector<Cell> stabbing_query(int id);

  const GlobalFrontierSet& global_frontiers() const { return global_frontiers_; }
  void set_global_frontiers(GlobalFrontierSet g) { global_frontiers_ = std::move(g); }

  /// World positions of the current global frontier set.
  std::vector<Eigen::Vector2d> global_frontier_points() const;
  std::size_t global_frontier_count() const;

  /// Joins all raw submap grids into one world-frame grid covering the
  /// union of the AABBs; each cell takes the value of the most recently
  /// finished submap that observed it (label != Unknown), and cells nobody
  /// observed stay Unknown.
  OccupancyGrid fuse_global_map() const;

 private:
  std::vector<Cell> stab(int id, const std::set<int>& others) const;

  std::vector<Submap> submaps_;
  std::vector<Eigen::AlignedBox2d> boxes_;
  GlobalFrontierSet global_frontiers_;
};

}  // namespace frontiers
