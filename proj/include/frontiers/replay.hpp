#pragma once

#include "frontiers/log.hpp"
#include "frontiers/snapshot.hpp"

namespace frontiers {

/// Re-runs a maintenance strategy over a recorded exploration sequence: the
/// same submaps (from the snapshot) enter a fresh graph at their recorded
/// initial poses, the same optimization events are applied, and the
/// strategy updates after each. All three strategies therefore consume
/// identical pose sequences; differences are attributable to the strategy
/// alone.
struct ReplayResult {
  Strategy strategy = Strategy::DFD;
  double epsilon = 0.0;
  std::vector<UpdateReport> reports;
};

ReplayResult replay_strategy(const sim::ExplorationLog& log, const Snapshot& snapshot,
                             Strategy strategy, double epsilon);

/// Frontier-point symmetric difference between two global sets.
std::int64_t frontier_mismatch(const GlobalFrontierSet& a, const GlobalFrontierSet& b);
std::int64_t frontier_set_size(const GlobalFrontierSet& s);

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  double accuracy() const;
  double precision() const;
  double recall() const;
};

struct ComparisonRound {
  int round = 0;
  std::int64_t dfd_points = 0;
  std::int64_t bfs_points = 0;
  std::int64_t direct_points = 0;
  std::int64_t bfs_mismatch = 0;
  std::int64_t direct_mismatch = 0;
  double dfd_elapsed_s = 0.0;
  double bfs_elapsed_s = 0.0;
  double direct_elapsed_s = 0.0;
};

/// Eq. 4 performance plus point-level confusion of BFS/Direct against the
/// DFD result, micro-averaged over rounds. The per-round candidate universe
/// for TN is every stored local frontier point of every finished submap.
struct ComparisonMetrics {
  double epsilon = 0.0;
  std::vector<ComparisonRound> per_round;
  std::int64_t dfd_total_points = 0;
  std::int64_t bfs_total_points = 0;
  std::int64_t direct_total_points = 0;
  std::int64_t bfs_total_mismatch = 0;
  std::int64_t direct_total_mismatch = 0;
  double performance_bfs = 0.0;
  double performance_direct = 0.0;
  ConfusionCounts bfs_confusion;
  ConfusionCounts direct_confusion;
};

ComparisonMetrics compare_strategies(const sim::ExplorationLog& log, const Snapshot& snapshot,
                                     double epsilon);

}  // namespace frontiers
