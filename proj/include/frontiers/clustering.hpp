#pragma once

#include <vector>

#include "frontiers/grid.hpp"

namespace frontiers {

/// A mean-shift group of world-frame frontier points. `components` is empty
/// until refine_by_connectivity partitions the members; the centroid is the
/// plain mean of the members (the point a center-based scheme would hand to
/// the planner, which is exactly what connectivity refinement exists to fix).
struct FrontierCluster {
  std::vector<Eigen::Vector2d> members;
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  std::vector<std::vector<Eigen::Vector2d>> components;
};

/// A reachable exploration goal: an actual frontier cell (never a centroid)
/// chosen from one connectivity component, with a priority score.
struct NavigationPoint {
  Eigen::Vector2d point = Eigen::Vector2d::Zero();
  double score = 0.0;
  int component_size = 0;
};

/// Mean-shift with a flat (uniform disc) kernel: each point's mode iterates
/// until the shift drops below 1e-4 m or 100 iterations; converged modes
/// closer than bandwidth/2 merge; every point joins its nearest mode.
/// Empty input yields empty output.
std::vector<FrontierCluster> mean_shift(const std::vector<Eigen::Vector2d>& points,
                                        double bandwidth);

/// Splits one cluster's members into 8-connected components of the
/// non-Occupied subgraph of the fused map (Free and Unknown both traverse;
/// only Occupied disconnects). Throws if a member lies off the grid.
std::vector<std::vector<Eigen::Vector2d>> refine_by_connectivity(const FrontierCluster& cluster,
                                                                 const OccupancyGrid& fused);

/// The member closest to the robot (Euclidean); ties break toward the
/// lexicographically smaller (x, y).
NavigationPoint select_navigation_point(const std::vector<Eigen::Vector2d>& component,
                                        const Pose2D& robot, const OccupancyGrid& fused);

/// Scores score = lambda * u - d, where u is the Unknown fraction in a
/// square window of half-width `window` meters around the point (cells past
/// the map edge count as Unknown) and d the distance to the robot; sorts by
/// descending score, stable.
std::vector<NavigationPoint> prioritize(std::vector<NavigationPoint> nav_points,
                                        const Pose2D& robot, const OccupancyGrid& fused,
                                        double window, double lambda = 10.0);

struct ClusterParams {
  double bandwidth = 1.0;
  double lambda = 10.0;
  double window = 2.0;
};

/// Full pipeline from candidate global-frontier points to prioritized
/// navigation points. Candidates are first filtered to cells that are
/// still frontier on the fused map (Free and Unknown-adjacent) and whose
/// region is non-Occupied-connected to the robot cell, so every emitted
/// point is reachable by construction.
std::vector<NavigationPoint> make_navigation_points(
    const std::vector<Eigen::Vector2d>& candidates, const OccupancyGrid& fused,
    const Pose2D& robot, const ClusterParams& params);

}  // namespace frontiers
