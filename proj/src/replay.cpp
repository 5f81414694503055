#include "frontiers/replay.hpp"

#include <algorithm>

namespace frontiers {

ReplayResult replay_strategy(const sim::ExplorationLog& log, const Snapshot& snapshot,
                             Strategy strategy, double epsilon) {
  DeviationConfig cfg{epsilon, log.config.lidar_range, log.config.angular_divisor};
  cfg.validate();

  ReplayResult result;
  result.strategy = strategy;
  result.epsilon = epsilon;
  result.reports.reserve(log.rounds.size());

  SubmapGraph graph;
  for (const sim::RoundRecord& record : log.rounds) {
    if (record.new_submap != graph.count())
      throw std::runtime_error("replay: log rounds and snapshot submaps out of step");
    Submap s = snapshot.graph.submap(record.new_submap);
    s.current_pose = record.submap_initial_cp;
    s.previous_pose = record.submap_initial_cp;
    s.cumulative_deviation = {};
    graph.add_submap(std::move(s));

    OptimizationEvent event = record.event;
    event.round = record.round;
    apply_optimization(graph, event);
    result.reports.push_back(run_strategy(strategy, graph, event, cfg));
  }
  return result;
}

std::int64_t frontier_set_size(const GlobalFrontierSet& s) {
  std::int64_t n = 0;
  for (const auto& [id, cells] : s) n += static_cast<std::int64_t>(cells.size());
  return n;
}

namespace {

std::int64_t symmetric_difference_count(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  std::int64_t count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (cell_less(a[i], b[j])) {
      ++count;
      ++i;
    } else if (cell_less(b[j], a[i])) {
      ++count;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return count + static_cast<std::int64_t>((a.size() - i) + (b.size() - j));
}

std::int64_t intersection_count(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  std::int64_t count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (cell_less(a[i], b[j]))
      ++i;
    else if (cell_less(b[j], a[i]))
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

const std::vector<Cell>& cells_or_empty(const GlobalFrontierSet& s, int id) {
  static const std::vector<Cell> empty;
  const auto it = s.find(id);
  return it != s.end() ? it->second : empty;
}

}  // namespace

std::int64_t frontier_mismatch(const GlobalFrontierSet& a, const GlobalFrontierSet& b) {
  std::int64_t count = 0;
  std::set<int> ids;
  for (const auto& [id, cells] : a) ids.insert(id);
  for (const auto& [id, cells] : b) ids.insert(id);
  for (int id : ids)
    count += symmetric_difference_count(cells_or_empty(a, id), cells_or_empty(b, id));
  return count;
}

double ConfusionCounts::accuracy() const {
  const std::int64_t total = tp + fp + fn + tn;
  return total > 0 ? static_cast<double>(tp + tn) / static_cast<double>(total) : 1.0;
}

double ConfusionCounts::precision() const {
  return tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 1.0;
}

double ConfusionCounts::recall() const {
  return tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 1.0;
}

namespace {

/// Point-level confusion vs the DFD result. The candidate universe is every
/// stored local frontier point of the submaps present that round.
void accumulate_confusion(ConfusionCounts& counts, const GlobalFrontierSet& strategy_set,
                          const GlobalFrontierSet& dfd_set, const Snapshot& snapshot,
                          int submaps_present) {
  for (int id = 0; id < submaps_present; ++id) {
    const std::int64_t universe =
        static_cast<std::int64_t>(snapshot.graph.submap(id).local_frontiers.size());
    const auto& mine = cells_or_empty(strategy_set, id);
    const auto& truth = cells_or_empty(dfd_set, id);
    const std::int64_t tp = intersection_count(mine, truth);
    const std::int64_t fp = static_cast<std::int64_t>(mine.size()) - tp;
    const std::int64_t fn = static_cast<std::int64_t>(truth.size()) - tp;
    counts.tp += tp;
    counts.fp += fp;
    counts.fn += fn;
    counts.tn += universe - tp - fp - fn;
  }
}

}  // namespace

ComparisonMetrics compare_strategies(const sim::ExplorationLog& log, const Snapshot& snapshot,
                                     double epsilon) {
  ComparisonMetrics metrics;
  metrics.epsilon = epsilon;

  const ReplayResult dfd = replay_strategy(log, snapshot, Strategy::DFD, epsilon);
  const ReplayResult bfs = replay_strategy(log, snapshot, Strategy::BFS, epsilon);
  const ReplayResult direct = replay_strategy(log, snapshot, Strategy::Direct, epsilon);

  const size_t rounds = log.rounds.size();
  metrics.per_round.resize(rounds);
  std::vector<std::int64_t> dfd_points(rounds), bfs_points(rounds), direct_points(rounds);
  for (size_t r = 0; r < rounds; ++r) {
    ComparisonRound& row = metrics.per_round[r];
    row.round = log.rounds[r].round;
    row.dfd_points = dfd.reports[r].queried_points;
    row.bfs_points = bfs.reports[r].queried_points;
    row.direct_points = direct.reports[r].queried_points;
    row.bfs_mismatch = frontier_mismatch(bfs.reports[r].frontiers, dfd.reports[r].frontiers);
    row.direct_mismatch =
        frontier_mismatch(direct.reports[r].frontiers, dfd.reports[r].frontiers);
    row.dfd_elapsed_s = dfd.reports[r].elapsed_s;
    row.bfs_elapsed_s = bfs.reports[r].elapsed_s;
    row.direct_elapsed_s = direct.reports[r].elapsed_s;
    dfd_points[r] = row.dfd_points;
    bfs_points[r] = row.bfs_points;
    direct_points[r] = row.direct_points;
    metrics.dfd_total_points += row.dfd_points;
    metrics.bfs_total_points += row.bfs_points;
    metrics.direct_total_points += row.direct_points;
    metrics.bfs_total_mismatch += row.bfs_mismatch;
    metrics.direct_total_mismatch += row.direct_mismatch;

    const int submaps_present = log.rounds[r].new_submap + 1;
    accumulate_confusion(metrics.bfs_confusion, bfs.reports[r].frontiers,
                         dfd.reports[r].frontiers, snapshot, submaps_present);
    accumulate_confusion(metrics.direct_confusion, direct.reports[r].frontiers,
                         dfd.reports[r].frontiers, snapshot, submaps_present);
  }
  metrics.performance_bfs = performance_ratio(bfs_points, dfd_points);
  metrics.performance_direct = performance_ratio(direct_points, dfd_points);
  return metrics;
}

}  // namespace frontiers
