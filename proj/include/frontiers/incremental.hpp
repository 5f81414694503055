#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>

#include "frontiers/submap_graph.hpp"

namespace frontiers {

/// Pose-deviation thresholds: epsilon in meters for x/y, epsilon divided by
/// (angular_divisor * lidar_range) for theta. With the defaults the angular
/// threshold is 0.05 / (2*pi*8) ~= 9.947e-4 rad.
struct DeviationConfig {
  double epsilon = 0.05;
  double lidar_range = 8.0;
  double angular_divisor = 2.0 * M_PI;

  double angular_threshold() const { return epsilon / (angular_divisor * lidar_range); }

  void validate() const {
    if (epsilon <= 0.0) throw std::invalid_argument("DeviationConfig: epsilon must be > 0");
    if (lidar_range <= 0.0)
      throw std::invalid_argument("DeviationConfig: lidar_range must be > 0");
    if (angular_divisor <= 0.0)
      throw std::invalid_argument("DeviationConfig: angular_divisor must be > 0");
  }
};

/// True iff any component of the single-round pose change exceeds its
/// threshold (strict: a change of exactly epsilon does not trigger). The
/// angular difference is normalized before comparison.
bool deviation_exceeds(const Pose2D& cp, const Pose2D& pp, const DeviationConfig& cfg);

/// Same thresholds applied to an accumulated deviation, treated as the
/// pose-difference argument itself (the raw angular sum is compared as-is).
bool deviation_exceeds(const PoseDelta& cd, const DeviationConfig& cfg);

/// One optimization round: corrected world poses per submap id, plus the id
/// of the most recently finished submap (the BFS/Direct seed).
struct OptimizationEvent {
  int round = 0;
  std::map<int, Pose2D> corrected_poses;
  int latest_submap = -1;
  bool loop_closure = false;
};

/// PP <- CP, CP <- corrected pose, boxes refreshed. Submaps absent from the
/// event keep their pose (PP still advances so no deviation registers).
void apply_optimization(SubmapGraph& graph, const OptimizationEvent& event);

enum class Strategy { DFD, BFS, Direct };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Per-round bookkeeping of one maintenance strategy.
struct UpdateReport {
  Strategy strategy = Strategy::DFD;
  int round = 0;
  std::set<int> queried_submaps;
  std::int64_t queried_points = 0;  // sum of local-frontier sizes over queried_submaps
  double elapsed_s = 0.0;
  std::size_t frontier_count = 0;
  GlobalFrontierSet frontiers;      // resulting global set, a snapshot
};

/// Baseline: stabbing-query every finished submap (the ground-truth result
/// the other strategies are compared against).
UpdateReport update_dfd(SubmapGraph& graph, const OptimizationEvent& event);

/// BFS method: starting from the latest submap, floods across intersecting
/// submaps whose single-round pose change exceeds the threshold; the
/// stabbing set is then expanded one hop with every member's intersectors.
/// Non-members keep their previous frontiers, re-anchored through the
/// corrected poses (frontiers are stored submap-relative).
UpdateReport update_bfs(SubmapGraph& graph, const OptimizationEvent& event,
                        const DeviationConfig& cfg);

/// Direct method: accumulates per-submap pose change across rounds and
/// triggers on the accumulated value, so sub-threshold drifts cannot hide
/// forever. The latest submap is always queried (with its intersectors);
/// accumulators reset only for submaps that triggered by threshold.
UpdateReport update_direct(SubmapGraph& graph, const OptimizationEvent& event,
                           const DeviationConfig& cfg);

UpdateReport run_strategy(Strategy s, SubmapGraph& graph, const OptimizationEvent& event,
                          const DeviationConfig& cfg);

/// P = 1 - sum(a) / sum(b); requires equal round counts and sum(b) > 0.
double performance_ratio(std::span<const std::int64_t> per_round_a,
                         std::span<const std::int64_t> per_round_b);

}  // namespace frontiers
