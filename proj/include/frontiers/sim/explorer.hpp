#pragma once

#include <map>

#include "frontiers/clustering.hpp"
#include "frontiers/config.hpp"
#include "frontiers/incremental.hpp"
#include "frontiers/sim/lidar.hpp"
#include "frontiers/sim/rng.hpp"
#include "frontiers/sim/world.hpp"

namespace frontiers::sim {

/// Odometry error model: world-frame position noise scaled by the square
/// root of distance traveled, heading noise by the square root of radians
/// turned. The same seed reproduces the same run exactly.
struct DriftModel {
  double per_meter_xy_sigma = 0.01;
  double per_radian_theta_sigma = 0.01;
  std::uint32_t rng_seed = 1;
};

/// Emulates a pose-graph optimizer: every finished submap's pose blends
/// toward its ground-truth anchor by `strength` of the current error, plus
/// zero-mean jitter (<= 1 mm). Applies PP <- CP, CP <- corrected and
/// returns the event; loop-closure rounds pass strength 1.0.
OptimizationEvent optimization_step(SubmapGraph& graph,
                                    const std::map<int, Pose2D>& truth_poses,
                                    double strength, double jitter_xy, double jitter_theta,
                                    Rng& rng, int round, int latest_submap,
                                    bool loop_closure);

/// Aborts the exploration loop when coverage stops growing: `update` is
/// called once per optimization round with the observed-cell count and
/// throws (with a diagnostic) after more than `limit` rounds without
/// growth.
class StallGuard {
 public:
  explicit StallGuard(int limit) : limit_(limit) {}

  void update(std::int64_t observed, int round) {
    if (observed > best_) {
      best_ = observed;
      stalled_rounds_ = 0;
      return;
    }
    if (++stalled_rounds_ > limit_)
      throw std::runtime_error(
          "explore: no coverage progress for " + std::to_string(stalled_rounds_) +
          " rounds (round " + std::to_string(round) + ", observed " +
          std::to_string(observed) + " cells); check drift/inflation settings");
  }

 private:
  int limit_;
  int stalled_rounds_ = 0;
  std::int64_t best_ = -1;
};

/// Everything one optimization round produced; the sequence of these is the
/// replayable exploration log.
struct RoundRecord {
  int round = 0;
  int new_submap = -1;
  Pose2D submap_initial_cp;            // pose at which the submap entered the graph
  OptimizationEvent event;
  UpdateReport report;
  Pose2D robot_true;
  Pose2D robot_est;
  std::vector<NavigationPoint> nav_points;
  std::vector<Eigen::Vector2d> planned_path;
  std::int64_t observed_cells = 0;
  std::vector<Eigen::Vector2d> ticks;  // estimated positions, one per movement tick
};

struct ExplorationLog {
  ExploreConfig config;
  std::vector<RoundRecord> rounds;
};

struct ExplorationResult {
  ExplorationLog log;
  SubmapGraph graph;
  OccupancyGrid fused;
};

/// Runs the explore-until-done loop: follow the planned path accumulating
/// drift, scan and integrate each tick; when a submap fills, optimize, run
/// the configured update strategy, fuse, cluster and re-target. Ends when
/// no navigation points remain; aborts with a diagnostic after
/// `max_stall_rounds` rounds without coverage growth.
ExplorationResult explore(const World& world, const ExploreConfig& config);

}  // namespace frontiers::sim
