#pragma once

#include "frontiers/sim/lidar.hpp"
#include "frontiers/submap_graph.hpp"

namespace frontiers::sim {

/// Accumulates scans into one submap until the scan quota fills, then
/// inflates the grid and detects the reachable local frontier once.
///
/// The submap frame is the estimated robot pose at the first scan; the grid
/// is a fixed square around it, sized so `max_scans` ticks of travel plus
/// the sensor range always stay inside.
class SubmapBuilder {
 public:
  SubmapBuilder(int id, const Pose2D& anchor_estimate, const Pose2D& anchor_truth,
                double resolution, double sensor_range, int max_scans,
                double robot_step);

  /// Rasterizes one scan taken from `estimated_pose` (world frame): cells
  /// traversed by a beam become Free (0.1), a hit beam's endpoint cell
  /// becomes Occupied (0.9), later writes overwriting earlier ones. Throws
  /// once the submap is finished.
  void integrate_scan(const Pose2D& estimated_pose, const std::vector<Beam>& scan);

  bool finished() const { return finished_; }
  int scan_count() const { return scan_count_; }
  int id() const { return submap_.id; }
  const Pose2D& anchor_estimate() const { return anchor_estimate_; }
  const Pose2D& anchor_truth() const { return anchor_truth_; }

  /// Inflates, detects local frontiers (falling back to the nearest Free
  /// cell within 2x the inflation radius when the seed cell got inflated
  /// over; no Free seed means no frontiers), and hands the submap over.
  Submap finish(int inflation_radius, Connectivity conn);

 private:
  void crop_to_observed(int margin);

  Submap submap_;
  Pose2D anchor_estimate_;
  Pose2D anchor_truth_;
  Cell seed_cell_{-1, -1};
  int max_scans_;
  int scan_count_ = 0;
  bool finished_ = false;
};

}  // namespace frontiers::sim
