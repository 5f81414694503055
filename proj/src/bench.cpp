#include "frontiers/bench.hpp"

#include <fstream>
#include <iostream>

#include "frontiers/grid_io.hpp"
#include "frontiers/oracles.hpp"
#include "frontiers/sim/worlds.hpp"

namespace frontiers::bench {

namespace {

namespace fs = std::filesystem;

void require_readable(const fs::path& path) {
  if (!fs::exists(path)) throw ValidationError("no such file: " + path.string());
}

SubmapGraph graph_at_round(const Snapshot& snapshot, const sim::RoundRecord& record) {
  SubmapGraph graph;
  for (int id = 0; id <= record.new_submap; ++id) {
    Submap s = snapshot.graph.submap(id);
    const auto it = record.event.corrected_poses.find(id);
    if (it != record.event.corrected_poses.end()) s.current_pose = it->second;
    graph.add_submap(std::move(s));
  }
  return graph;
}

RenderOverlays overlays_for(const SubmapGraph& graph, const sim::ExplorationLog& log,
                            size_t round_index) {
  const sim::RoundRecord& record = log.rounds[round_index];
  RenderOverlays overlays;
  overlays.queried_submaps = record.report.queried_submaps;
  for (const auto& [id, cells] : record.report.frontiers)
    for (const Cell& c : cells) overlays.frontier_points.push_back(graph.submap(id).frontier_world(c));
  for (const auto& nav : record.nav_points) overlays.nav_points.push_back(nav.point);
  for (size_t r = 0; r <= round_index; ++r)
    overlays.trajectory.insert(overlays.trajectory.end(), log.rounds[r].ticks.begin(),
                               log.rounds[r].ticks.end());
  return overlays;
}

}  // namespace

fs::path snapshot_dir_for(const fs::path& log_path) {
  return log_path.parent_path() / "snapshot";
}

void write_rounds_csv(const fs::path& path, const sim::ExplorationLog& log,
                      const std::vector<std::int64_t>& mismatch_vs_dfd) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "round,strategy,queried_submaps,queried_points,elapsed_s,frontier_count,"
         "mismatch_vs_dfd\n";
  for (size_t r = 0; r < log.rounds.size(); ++r) {
    const sim::RoundRecord& record = log.rounds[r];
    out << record.round << ',' << strategy_name(record.report.strategy) << ','
        << record.report.queried_submaps.size() << ',' << record.report.queried_points << ','
        << record.report.elapsed_s << ',' << record.report.frontier_count << ','
        << (r < mismatch_vs_dfd.size() ? std::to_string(mismatch_vs_dfd[r]) : std::string())
        << '\n';
  }
}

void cmd_explore(const ExploreOptions& options) {
  require_readable(options.world_pgm);
  ExploreConfig config;
  if (options.config_file) {
    require_readable(*options.config_file);
    try {
      config = load_config(*options.config_file);
    } catch (const std::exception& e) {
      throw ValidationError(e.what());
    }
  }
  if (options.seed) config.seed = *options.seed;
  if (options.strategy) config.strategy = *options.strategy;
  try {
    config.validate();
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }

  sim::World world;
  try {
    world = sim::load_world(options.world_pgm);
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec || !fs::is_directory(options.out_dir))
    throw ValidationError("cannot create out dir " + options.out_dir.string());

  sim::ExplorationResult result = sim::explore(world, config);
  write_log(result.log, options.out_dir / "log.ndjson");
  save_snapshot(result.graph, config.inflation_radius, config.connectivity,
                options.out_dir / "snapshot");
  save_grid_pgm(result.fused, options.out_dir / "map.pgm");

  // The per-round mismatch column measures the configured strategy against
  // a DFD replay of the same recorded sequence.
  Snapshot snapshot{config.inflation_radius, config.connectivity, result.graph};
  const ReplayResult dfd = replay_strategy(result.log, snapshot, Strategy::DFD, config.epsilon);
  std::vector<std::int64_t> mismatch(result.log.rounds.size(), 0);
  for (size_t r = 0; r < result.log.rounds.size(); ++r)
    mismatch[r] =
        frontier_mismatch(result.log.rounds[r].report.frontiers, dfd.reports[r].frontiers);
  write_rounds_csv(options.out_dir / "rounds.csv", result.log, mismatch);

  {
    std::ofstream nav(options.out_dir / "nav_points.csv");
    nav << "round,x,y,score,component_size\n";
    for (const auto& record : result.log.rounds)
      for (const auto& p : record.nav_points)
        nav << record.round << ',' << p.point.x() << ',' << p.point.y() << ',' << p.score
            << ',' << p.component_size << '\n';
  }

  if (!result.log.rounds.empty()) {
    const size_t last = result.log.rounds.size() - 1;
    const RenderOverlays overlays = overlays_for(result.graph, result.log, last);
    render_map(result.fused, result.graph, overlays).save_png(options.out_dir / "map.png");
  }
  std::cout << "explore: " << result.log.rounds.size() << " rounds, "
            << result.graph.count() << " submaps, observed "
            << (result.log.rounds.empty() ? 0 : result.log.rounds.back().observed_cells)
            << " cells -> " << options.out_dir.string() << "\n";
}

void write_compare_csv(const fs::path& path, const std::vector<ComparisonMetrics>& metrics) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "epsilon,round,dfd_points,bfs_points,direct_points,bfs_mismatch,direct_mismatch,"
         "dfd_elapsed_s,bfs_elapsed_s,direct_elapsed_s\n";
  for (const ComparisonMetrics& m : metrics)
    for (const ComparisonRound& r : m.per_round)
      out << m.epsilon << ',' << r.round << ',' << r.dfd_points << ',' << r.bfs_points << ','
          << r.direct_points << ',' << r.bfs_mismatch << ',' << r.direct_mismatch << ','
          << r.dfd_elapsed_s << ',' << r.bfs_elapsed_s << ',' << r.direct_elapsed_s << '\n';
}

void write_summary_csv(const fs::path& path, const std::vector<ComparisonMetrics>& metrics) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "epsilon,dfd_total_points,bfs_total_points,direct_total_points,"
         "performance_bfs,performance_direct,bfs_total_mismatch,direct_total_mismatch,"
         "bfs_accuracy,bfs_precision,bfs_recall,direct_accuracy,direct_precision,"
         "direct_recall\n";
  for (const ComparisonMetrics& m : metrics)
    out << m.epsilon << ',' << m.dfd_total_points << ',' << m.bfs_total_points << ','
        << m.direct_total_points << ',' << m.performance_bfs << ',' << m.performance_direct
        << ',' << m.bfs_total_mismatch << ',' << m.direct_total_mismatch << ','
        << m.bfs_confusion.accuracy() << ',' << m.bfs_confusion.precision() << ','
        << m.bfs_confusion.recall() << ',' << m.direct_confusion.accuracy() << ','
        << m.direct_confusion.precision() << ',' << m.direct_confusion.recall() << '\n';
}

void cmd_compare(const fs::path& log_path, std::vector<double> epsilons,
                 const fs::path& out_dir) {
  require_readable(log_path);
  const fs::path snap_dir = snapshot_dir_for(log_path);
  if (!fs::exists(snap_dir / "manifest.json"))
    throw ValidationError("no snapshot next to the log: " + snap_dir.string());
  if (epsilons.empty()) epsilons.push_back(0.05);
  for (double e : epsilons)
    if (e <= 0.0) throw ValidationError("epsilon must be > 0");

  const sim::ExplorationLog log = read_log(log_path);
  const Snapshot snapshot = load_snapshot(snap_dir);

  std::vector<ComparisonMetrics> metrics;
  metrics.reserve(epsilons.size());
  for (double eps : epsilons) metrics.push_back(compare_strategies(log, snapshot, eps));

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  write_compare_csv(out_dir / "compare.csv", metrics);
  write_summary_csv(out_dir / "summary.csv", metrics);

  for (const ComparisonMetrics& m : metrics) {
    std::cout << "epsilon " << m.epsilon << ": P_direct=" << m.performance_direct
              << " P_bfs=" << m.performance_bfs << " points dfd/bfs/direct "
              << m.dfd_total_points << "/" << m.bfs_total_points << "/"
              << m.direct_total_points << " mismatch bfs/direct " << m.bfs_total_mismatch
              << "/" << m.direct_total_mismatch << " direct acc/prec/rec "
              << m.direct_confusion.accuracy() << "/" << m.direct_confusion.precision() << "/"
              << m.direct_confusion.recall() << "\n";
  }
}

void cmd_render(const fs::path& log_path, int round, const fs::path& out_png) {
  require_readable(log_path);
  const sim::ExplorationLog log = read_log(log_path);
  if (round < 0 || static_cast<size_t>(round) >= log.rounds.size())
    throw ValidationError("round " + std::to_string(round) + " out of range (log has " +
                          std::to_string(log.rounds.size()) + " rounds)");
  const Snapshot snapshot = load_snapshot(snapshot_dir_for(log_path));

  const SubmapGraph graph = graph_at_round(snapshot, log.rounds[static_cast<size_t>(round)]);
  const OccupancyGrid fused = graph.fuse_global_map();
  const RenderOverlays overlays = overlays_for(graph, log, static_cast<size_t>(round));
  render_map(fused, graph, overlays).save_png(out_png);
  std::cout << "render: round " << round << " -> " << out_png.string() << "\n";
}

bool cmd_oracle_check(const fs::path& log_path) {
  require_readable(log_path);
  const sim::ExplorationLog log = read_log(log_path);
  const Snapshot snapshot = load_snapshot(snapshot_dir_for(log_path));
  bool all_ok = true;

  // 1. Stored local frontiers match the brute-force frontier definition.
  {
    bool ok = true;
    for (int id = 0; id < snapshot.graph.count(); ++id) {
      const Submap& s = snapshot.graph.submap(id);
      std::vector<Cell> expected;
      if (s.detection_seed.x() >= 0)
        expected = oracles::frontier_cells(s.inflated, s.detection_seed,
                                           snapshot.connectivity);
      if (expected.size() != s.local_frontiers.points.size()) ok = false;
      for (size_t i = 0; ok && i < expected.size(); ++i)
        ok = expected[i].x() == s.local_frontiers.points[i].x() &&
             expected[i].y() == s.local_frontiers.points[i].y();
      if (!ok) break;
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " local frontiers match brute-force definition\n";
    all_ok &= ok;
  }

  // 2. AABB-pruned stabbing equals the all-pairs check at the final poses.
  {
    bool ok = true;
    SubmapGraph graph = snapshot.graph;
    for (int id = 0; id < graph.count() && ok; ++id) {
      const auto pruned = graph.stabbing_query(id);
      const auto brute = oracles::stabbing_survivors_all_pairs(graph, id);
      ok = pruned.size() == brute.size();
      for (size_t i = 0; ok && i < pruned.size(); ++i)
        ok = pruned[i].x() == brute[i].x() && pruned[i].y() == brute[i].y();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " stabbing-query pruning is sound\n";
    all_ok &= ok;
  }

  // 3. Direct at epsilon -> 0 reproduces DFD on every round.
  {
    const ReplayResult dfd = replay_strategy(log, snapshot, Strategy::DFD, 1e-9);
    const ReplayResult direct = replay_strategy(log, snapshot, Strategy::Direct, 1e-9);
    std::int64_t mismatches = 0;
    for (size_t r = 0; r < log.rounds.size(); ++r)
      mismatches += frontier_mismatch(direct.reports[r].frontiers, dfd.reports[r].frontiers);
    const bool ok = mismatches == 0;
    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " Direct at epsilon=1e-9 equals DFD (mismatches: " << mismatches << ")\n";
    all_ok &= ok;
  }
  return all_ok;
}

}  // namespace frontiers::bench
