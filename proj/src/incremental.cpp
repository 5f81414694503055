#include "frontiers/incremental.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>

namespace frontiers {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t count_points(const SubmapGraph& graph, const std::set<int>& ids) {
  std::int64_t n = 0;
  for (int id : ids) n += static_cast<std::int64_t>(graph.submap(id).local_frontiers.size());
  return n;
}

UpdateReport finish_report(Strategy strategy, const SubmapGraph& graph,
                           const OptimizationEvent& event, std::set<int> queried,
                           Clock::time_point start) {
  UpdateReport report;
  report.strategy = strategy;
  report.round = event.round;
  report.queried_points = count_points(graph, queried);
  report.queried_submaps = std::move(queried);
  report.elapsed_s = seconds_since(start);
  report.frontiers = graph.global_frontiers();
  report.frontier_count = graph.global_frontier_count();
  return report;
}

/// One-hop expansion: the set plus every member's finished intersectors.
std::set<int> expand_with_intersectors(const SubmapGraph& graph, const std::set<int>& members) {
  std::set<int> expanded = members;
  for (int id : members)
    for (int neighbor : graph.intersecting_submaps(id))
      if (graph.submap(neighbor).finished) expanded.insert(neighbor);
  return expanded;
}

}  // namespace

bool deviation_exceeds(const Pose2D& cp, const Pose2D& pp, const DeviationConfig& cfg) {
  return std::abs(cp.x - pp.x) > cfg.epsilon || std::abs(cp.y - pp.y) > cfg.epsilon ||
         std::abs(normalize_angle(cp.theta - pp.theta)) > cfg.angular_threshold();
}

bool deviation_exceeds(const PoseDelta& cd, const DeviationConfig& cfg) {
  return std::abs(cd.dx) > cfg.epsilon || std::abs(cd.dy) > cfg.epsilon ||
         std::abs(cd.dtheta) > cfg.angular_threshold();
}

void apply_optimization(SubmapGraph& graph, const OptimizationEvent& event) {
  if (!graph.has(event.latest_submap))
    throw std::invalid_argument("apply_optimization: unknown latest_submap");
  for (const auto& [id, pose] : event.corrected_poses)
    if (!graph.has(id))
      throw std::invalid_argument("apply_optimization: corrected pose for unknown submap");

  for (int id = 0; id < graph.count(); ++id) {
    Submap& s = graph.submap(id);
    s.previous_pose = s.current_pose;
    const auto it = event.corrected_poses.find(id);
    if (it != event.corrected_poses.end()) graph.set_current_pose(id, it->second);
  }
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::DFD: return "dfd";
    case Strategy::BFS: return "bfs";
    case Strategy::Direct: return "direct";
  }
  return "dfd";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "dfd") return Strategy::DFD;
  if (name == "bfs") return Strategy::BFS;
  if (name == "direct") return Strategy::Direct;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected dfd|bfs|direct)");
}

UpdateReport update_dfd(SubmapGraph& graph, const OptimizationEvent& event) {
  const auto start = Clock::now();
  std::set<int> queried;
  for (int id = 0; id < graph.count(); ++id) {
    if (!graph.submap(id).finished) continue;
    queried.insert(id);
    graph.stabbing_query(id);
  }
  return finish_report(Strategy::DFD, graph, event, std::move(queried), start);
}

UpdateReport update_bfs(SubmapGraph& graph, const OptimizationEvent& event,
                        const DeviationConfig& cfg) {
  if (!graph.has(event.latest_submap))
    throw std::invalid_argument("update_bfs: unknown latest_submap");
  const auto start = Clock::now();

  std::set<int> visited = {event.latest_submap};
  std::queue<int> bfs_queue;
  bfs_queue.push(event.latest_submap);
  while (!bfs_queue.empty()) {
    const int n = bfs_queue.front();
    bfs_queue.pop();
    for (int i : graph.intersecting_submaps(n)) {
      if (visited.count(i)) continue;
      const Submap& s = graph.submap(i);
      if (!s.finished) continue;
      if (!deviation_exceeds(s.current_pose, s.previous_pose, cfg)) continue;
      visited.insert(i);
      bfs_queue.push(i);
    }
  }

  const std::set<int> queried = expand_with_intersectors(graph, visited);
  for (int id : queried) graph.stabbing_query(id);
  return finish_report(Strategy::BFS, graph, event, queried, start);
}

UpdateReport update_direct(SubmapGraph& graph, const OptimizationEvent& event,
                           const DeviationConfig& cfg) {
  if (!graph.has(event.latest_submap))
    throw std::invalid_argument("update_direct: unknown latest_submap");
  const auto start = Clock::now();

  std::set<int> triggered;
  for (int id = 0; id < graph.count(); ++id) {
    Submap& s = graph.submap(id);
    if (!s.finished) continue;
    s.cumulative_deviation =
        accumulate_deviation(s.cumulative_deviation, s.current_pose, s.previous_pose);
    if (deviation_exceeds(s.cumulative_deviation, cfg)) triggered.insert(id);
  }

  std::set<int> seeds = triggered;
  seeds.insert(event.latest_submap);
  const std::set<int> queried = expand_with_intersectors(graph, seeds);
  for (int id : queried) graph.stabbing_query(id);

  // Reset only the threshold-triggered accumulators; neighbors dragged in
  // by intersection keep accumulating their own drift.
  for (int id : triggered) graph.submap(id).cumulative_deviation = {};

  return finish_report(Strategy::Direct, graph, event, queried, start);
}

UpdateReport run_strategy(Strategy s, SubmapGraph& graph, const OptimizationEvent& event,
                          const DeviationConfig& cfg) {
  switch (s) {
    case Strategy::DFD: return update_dfd(graph, event);
    case Strategy::BFS: return update_bfs(graph, event, cfg);
    case Strategy::Direct: return update_direct(graph, event, cfg);
  }
  throw std::logic_error("run_strategy: bad strategy");
}

double performance_ratio(std::span<const std::int64_t> per_round_a,
                         std::span<const std::int64_t> per_round_b) {
  if (per_round_a.size() != per_round_b.size())
    throw std::invalid_argument("performance_ratio: round counts differ");
  const double total_a = static_cast<double>(
      std::accumulate(per_round_a.begin(), per_round_a.end(), std::int64_t{0}));
  const double total_b = static_cast<double>(
      std::accumulate(per_round_b.begin(), per_round_b.end(), std::int64_t{0}));
  if (total_b == 0.0)
    throw std::invalid_argument("performance_ratio: baseline total is zero");
  return 1.0 - total_a / total_b;
}

}  // namespace frontiers
