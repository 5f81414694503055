// Acceptance suite: every criterion prints one PASS/FAIL line with its
// measured numbers; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>

#include "frontiers/clustering.hpp"
#include "frontiers/oracles.hpp"
#include "frontiers/replay.hpp"
#include "frontiers/sim/explorer.hpp"
#include "frontiers/sim/worlds.hpp"
#include "test_support.hpp"

using namespace frontiers;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

// --- criterion 1: local-frontier oracle equivalence ------------------------

void criterion_local_frontier_oracle() {
  const auto t0 = Clock::now();
  std::mt19937 gen(20240501);
  int checked = 0;
  bool all_equal = true;
  while (checked < 50) {
    const OccupancyGrid grid = test_support::random_grid(gen, 64, 64);
    const auto seed = test_support::any_free_cell(grid, gen);
    if (!seed) continue;
    ++checked;
    const auto wfd = detect_local_frontiers(grid, *seed);
    const auto oracle = oracles::frontier_cells(grid, *seed);
    if (!test_support::same_cells(wfd.points, oracle)) all_equal = false;
  }
  const double elapsed = seconds_since(t0);
  report(1, all_equal && elapsed < 5.0,
         fmt("WFD equals brute-force frontier definition on 50 random 64x64 grids "
             "(equal=%s, %.2fs < 5s)",
             all_equal ? "yes" : "no", elapsed));
}

// --- criterion 2: stabbing-query pruning soundness --------------------------

void criterion_pruning_soundness() {
  const auto t0 = Clock::now();
  std::mt19937 gen(7777);
  bool all_equal = true;
  std::uniform_int_distribution<int> submap_count(2, 20);
  for (int trial = 0; trial < 50; ++trial) {
    SubmapGraph graph = test_support::random_graph(gen, submap_count(gen));
    for (int id = 0; id < graph.count(); ++id) {
      const auto pruned = graph.stabbing_query(id);
      const auto brute = oracles::stabbing_survivors_all_pairs(graph, id);
      if (!test_support::same_cells(pruned, brute)) all_equal = false;
    }
  }
  const double elapsed = seconds_since(t0);
  report(2, all_equal && elapsed < 10.0,
         fmt("AABB-pruned stabbing equals all-pairs brute force on 50 random graphs "
             "(equal=%s, %.2fs < 10s)",
             all_equal ? "yes" : "no", elapsed));
}

// --- shared two-loop exploration for criteria 3, 4, 6 -----------------------

struct LoopRun {
  sim::ExplorationResult result;
  Snapshot snapshot;
  double explore_seconds = 0.0;
};

LoopRun run_two_loop() {
  ExploreConfig cfg;
  cfg.submap_scans = 25;  // more optimization rounds over the same course
  const auto t0 = Clock::now();
  LoopRun run;
  run.result = sim::explore(sim::two_loop_world(), cfg);
  run.explore_seconds = seconds_since(t0);
  run.snapshot = Snapshot{cfg.inflation_radius, cfg.connectivity, run.result.graph};
  return run;
}

void criterion_direct_safety(const LoopRun& run, const ReplayResult& dfd) {
  const int rounds = static_cast<int>(run.result.log.rounds.size());
  const ReplayResult direct = replay_strategy(run.result.log, run.snapshot,
                                              Strategy::Direct, 1e-9);
  std::int64_t mismatches = 0;
  for (size_t r = 0; r < dfd.reports.size(); ++r)
    mismatches += frontier_mismatch(direct.reports[r].frontiers, dfd.reports[r].frontiers);
  report(3, rounds >= 100 && mismatches == 0,
         fmt("Direct at epsilon=1e-9 equals DFD on a %d-round log (>=100 rounds, "
             "mismatches=%lld)",
             rounds, static_cast<long long>(mismatches)));
}

void criterion_work_reduction(const LoopRun& run, const ReplayResult& dfd) {
  const auto t0 = Clock::now();
  const ReplayResult direct = replay_strategy(run.result.log, run.snapshot,
                                              Strategy::Direct, 0.05);
  std::vector<std::int64_t> direct_points, dfd_points;
  std::int64_t mismatches = 0, dfd_total_frontiers = 0;
  bool loop_closures = false;
  for (size_t r = 0; r < dfd.reports.size(); ++r) {
    direct_points.push_back(direct.reports[r].queried_points);
    dfd_points.push_back(dfd.reports[r].queried_points);
    mismatches += frontier_mismatch(direct.reports[r].frontiers, dfd.reports[r].frontiers);
    dfd_total_frontiers += frontier_set_size(dfd.reports[r].frontiers);
    if (run.result.log.rounds[r].event.loop_closure) loop_closures = true;
  }
  const double p = performance_ratio(direct_points, dfd_points);
  const double mismatch_rate =
      static_cast<double>(mismatches) / static_cast<double>(std::max<std::int64_t>(1, dfd_total_frontiers));
  const double elapsed = run.explore_seconds + seconds_since(t0);
  report(4,
         loop_closures && p >= 0.30 && mismatch_rate <= 0.005 && elapsed < 120.0,
         fmt("two-loop world: P(Direct vs DFD)=%.3f >= 0.30, mismatch rate=%.5f%% <= 0.5%%, "
             "loop closures=%s, %.1fs < 120s",
             p, 100.0 * mismatch_rate, loop_closures ? "yes" : "no", elapsed));
}

void criterion_threshold_monotonicity(const LoopRun& run, const ReplayResult& dfd) {
  std::vector<std::int64_t> mismatch_totals, point_totals;
  for (const double eps : {0.01, 0.05, 0.20}) {
    const ReplayResult direct = replay_strategy(run.result.log, run.snapshot,
                                                Strategy::Direct, eps);
    std::int64_t mismatches = 0, points = 0;
    for (size_t r = 0; r < dfd.reports.size(); ++r) {
      mismatches += frontier_mismatch(direct.reports[r].frontiers, dfd.reports[r].frontiers);
      points += direct.reports[r].queried_points;
    }
    mismatch_totals.push_back(mismatches);
    point_totals.push_back(points);
  }
  const bool mismatch_monotone = mismatch_totals[0] <= mismatch_totals[1] &&
                                 mismatch_totals[1] <= mismatch_totals[2];
  const bool points_monotone =
      point_totals[0] >= point_totals[1] && point_totals[1] >= point_totals[2];
  report(6, mismatch_monotone && points_monotone,
         fmt("epsilon {0.01, 0.05, 0.20}: mismatches {%lld, %lld, %lld} non-decreasing, "
             "queried points {%lld, %lld, %lld} non-increasing",
             static_cast<long long>(mismatch_totals[0]),
             static_cast<long long>(mismatch_totals[1]),
             static_cast<long long>(mismatch_totals[2]),
             static_cast<long long>(point_totals[0]),
             static_cast<long long>(point_totals[1]),
             static_cast<long long>(point_totals[2])));
}

// --- criterion 5: the BFS blind spot ----------------------------------------

void criterion_bfs_blind_spot() {
  std::vector<std::string> rows(20, std::string(10, '.') + std::string(10, '?'));
  const auto local = test_support::grid_from_ascii(rows);
  auto build = [&] {
    SubmapGraph graph;
    for (int id = 0; id < 3; ++id)
      graph.add_submap(test_support::make_submap(id, local, {id * 0.8, 0, 0}, Cell(0, 0)));
    return graph;
  };
  SubmapGraph bfs_graph = build();
  SubmapGraph direct_graph = build();
  const DeviationConfig cfg;  // epsilon = 0.05

  bool bfs_missed = true, direct_caught = false;
  for (int round = 0; round < 2; ++round) {
    const Pose2D crept{0.03 * (round + 1), 0.0, 0.0};  // submap 0 creeps 3 cm per round
    for (SubmapGraph* graph : {&bfs_graph, &direct_graph}) {
      OptimizationEvent event;
      event.round = round;
      event.latest_submap = 2;
      for (int id = 0; id < 3; ++id)
        event.corrected_poses[id] = id == 0 ? crept : graph->submap(id).current_pose;
      apply_optimization(*graph, event);
      const UpdateReport r = graph == &bfs_graph ? update_bfs(*graph, event, cfg)
                                                 : update_direct(*graph, event, cfg);
      if (graph == &bfs_graph && r.queried_submaps.count(0)) bfs_missed = false;
      if (graph == &direct_graph && round == 1 && r.queried_submaps.count(0))
        direct_caught = true;
    }
  }
  report(5, bfs_missed && direct_caught,
         fmt("3-submap chain, 3 cm/round sub-threshold drift: BFS never queries the far "
             "submap (%s), Direct catches it once the total passes epsilon (%s)",
             bfs_missed ? "yes" : "no", direct_caught ? "yes" : "no"));
}

// --- criterion 7: reachability of navigation points -------------------------

bool nav_points_reachable(const sim::ExplorationResult& result, std::int64_t& checked) {
  for (const auto& record : result.log.rounds) {
    if (record.nav_points.empty()) continue;
    SubmapGraph graph;
    for (int id = 0; id <= record.new_submap; ++id) {
      Submap s = result.graph.submap(id);
      s.current_pose = record.event.corrected_poses.at(id);
      graph.add_submap(std::move(s));
    }
    const OccupancyGrid fused = graph.fuse_global_map();
    const auto robot_cell = fused.world_to_cell(record.robot_est.translation());
    if (!robot_cell) return false;
    for (const auto& nav : record.nav_points) {
      const auto cell = fused.world_to_cell(nav.point);
      if (!cell) return false;
      if (!oracles::path_exists(fused, *robot_cell, *cell, /*free_only=*/false)) return false;
      ++checked;
    }
  }
  return true;
}

void criterion_reachability(const LoopRun& loop_run,
                            const sim::ExplorationResult& corridor_result) {
  std::int64_t checked = 0;
  const bool loop_ok = nav_points_reachable(loop_run.result, checked);
  const bool corridor_ok = nav_points_reachable(corridor_result, checked);

  // Fig.6-style map: the unrefined mean-shift centroid lands inside the
  // wall; the refined pipeline never does.
  const OccupancyGrid fused = sim::wall_split_frontier_map();
  std::vector<Eigen::Vector2d> dense;
  for (int cy = 0; cy < fused.height(); ++cy)
    for (int cx = 0; cx < fused.width(); ++cx)
      if (is_frontier_cell(fused, {cx, cy}, Connectivity::Eight))
        dense.push_back(fused.cell_center_world({cx, cy}));
  int occupied_centroids = 0;
  for (const FrontierCluster& c : mean_shift(dense, 1.0)) {
    const auto cell = fused.world_to_cell(c.centroid);
    if (cell && fused.label(*cell) == CellLabel::Occupied) ++occupied_centroids;
  }
  const Pose2D robot{0.35, 1.0, 0.0};
  int occupied_navs = 0;
  const auto navs = make_navigation_points(dense, fused, robot, {1.0, 10.0, 2.0});
  for (const NavigationPoint& nav : navs) {
    const auto cell = fused.world_to_cell(nav.point);
    if (!cell || fused.label(*cell) != CellLabel::Free) ++occupied_navs;
  }

  report(7,
         loop_ok && corridor_ok && checked > 0 && occupied_centroids >= 1 &&
             occupied_navs == 0 && !navs.empty(),
         fmt("%lld navigation points across both exploration runs all pass the "
             "independent path check; wall-split map: %d occupied mean-shift centroid(s) "
             "unrefined vs %d occupied refined points",
             static_cast<long long>(checked), occupied_centroids, occupied_navs));
}

// --- criterion 8: worked equation values -------------------------------------

void criterion_worked_values() {
  const DeviationConfig cfg;  // epsilon 0.05, R 8
  const double angular = cfg.angular_threshold();
  const bool angular_ok = std::abs(angular - 9.947e-4) < 5e-8;  // 4 significant digits

  PoseDelta cd = accumulate_deviation({}, {0.03, 0, 0}, {0, 0, 0});
  cd = accumulate_deviation(cd, {0.06, 0, 0}, {0.03, 0, 0});
  const bool cumulative_ok = cd.dx == 0.06;
  const bool triggers = deviation_exceeds(cd, cfg);

  const std::vector<std::int64_t> a{30, 10}, b{50, 50};
  const bool ratio_ok = performance_ratio(a, b) == 0.6;

  report(8, angular_ok && cumulative_ok && triggers && ratio_ok,
         fmt("angular threshold %.6e ~ 9.947e-4, two 3 cm drifts accumulate to %.2f m and "
             "exceed epsilon, P(40/100)=%.1f",
             angular, cd.dx, performance_ratio(a, b)));
}

// --- criterion 9: corridor coverage ------------------------------------------

struct CorridorRun {
  sim::ExplorationResult result;
  double coverage = 0.0;
  bool deterministic = false;
  double elapsed = 0.0;
};

CorridorRun run_corridor() {
  CorridorRun run;
  const auto t0 = Clock::now();
  const sim::World world = sim::corridor_world(20.0, 4.0);
  ExploreConfig cfg;
  cfg.lidar_beams = 90;
  run.result = sim::explore(world, cfg);
  const auto rerun = sim::explore(world, cfg);
  run.elapsed = seconds_since(t0);

  const auto start_cell = world.truth.world_to_cell(world.start.translation());
  std::int64_t reachable = 0, observed = 0;
  for (int cy = 0; cy < world.truth.height(); ++cy) {
    for (int cx = 0; cx < world.truth.width(); ++cx) {
      if (world.truth.label(cx, cy) != CellLabel::Free) continue;
      if (!oracles::path_exists(world.truth, *start_cell, {cx, cy}, true)) continue;
      ++reachable;
      const auto cell =
          run.result.fused.world_to_cell(world.truth.cell_center_world({cx, cy}));
      if (cell && run.result.fused.label(*cell) != CellLabel::Unknown) ++observed;
    }
  }
  run.coverage = static_cast<double>(observed) / static_cast<double>(reachable);

  run.deterministic = run.result.log.rounds.size() == rerun.log.rounds.size();
  for (size_t r = 0; r < run.result.log.rounds.size() && run.deterministic; ++r) {
    const auto& x = run.result.log.rounds[r];
    const auto& y = rerun.log.rounds[r];
    run.deterministic = x.observed_cells == y.observed_cells && x.robot_est == y.robot_est &&
                        x.robot_true == y.robot_true &&
                        test_support::same_frontiers(x.report.frontiers, y.report.frontiers);
  }
  return run;
}

void criterion_corridor_coverage(const CorridorRun& run) {
  report(9, run.coverage >= 0.99 && run.deterministic && run.elapsed < 60.0,
         fmt("corridor exploration observed %.2f%% >= 99%% of reachable free cells, "
             "deterministic rerun identical=%s, %.1fs < 60s (both runs)",
             100.0 * run.coverage, run.deterministic ? "yes" : "no", run.elapsed));
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_local_frontier_oracle();
  criterion_pruning_soundness();

  LoopRun loop_run = run_two_loop();
  const ReplayResult dfd =
      replay_strategy(loop_run.result.log, loop_run.snapshot, Strategy::DFD, 0.05);
  const CorridorRun corridor = run_corridor();

  criterion_direct_safety(loop_run, dfd);
  criterion_work_reduction(loop_run, dfd);
  criterion_bfs_blind_spot();
  criterion_threshold_monotonicity(loop_run, dfd);
  criterion_reachability(loop_run, corridor.result);
  criterion_worked_values();
  criterion_corridor_coverage(corridor);

  std::printf(failures == 0 ? "all criteria passed\n" : "%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
