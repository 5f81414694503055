#pragma once

#include <optional>

#include "frontiers/replay.hpp"
#include "frontiers/render.hpp"
#include "frontiers/sim/explorer.hpp"

namespace frontiers::bench {

/// Input/argument problems exit with code 2; plain runtime errors with 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExploreOptions {
  std::filesystem::path world_pgm;
  std::optional<std::filesystem::path> config_file;
  std::filesystem::path out_dir;
  std::optional<std::uint32_t> seed;       // overrides the config
  std::optional<std::string> strategy;     // overrides the config
};

/// Runs the exploration loop and writes out_dir/log.ndjson, snapshot/,
/// map.pgm(+json), map.png, rounds.csv and nav_points.csv.
void cmd_explore(const ExploreOptions& options);

/// Replays the log under DFD/BFS/Direct per epsilon; writes compare.csv and
/// summary.csv next to `out_dir` and prints the summary. The snapshot is
/// expected at <log dir>/snapshot.
void cmd_compare(const std::filesystem::path& log_path, std::vector<double> epsilons,
                 const std::filesystem::path& out_dir);

/// Renders one round of a recorded run to PNG: fused map, queried-submap
/// regions tinted red, frontiers red, navigation points blue, trajectory
/// as a blue polyline.
void cmd_render(const std::filesystem::path& log_path, int round,
                const std::filesystem::path& out_png);

/// Runs the brute-force oracles against a recorded run: per-submap frontier
/// definition, stabbing-query pruning soundness, and Direct-at-epsilon->0
/// equivalence with DFD. Returns false if any check fails.
bool cmd_oracle_check(const std::filesystem::path& log_path);

/// Helpers shared with tests.
std::filesystem::path snapshot_dir_for(const std::filesystem::path& log_path);
void write_rounds_csv(const std::filesystem::path& path, const sim::ExplorationLog& log,
                      const std::vector<std::int64_t>& mismatch_vs_dfd);
void write_compare_csv(const std::filesystem::path& path,
                       const std::vector<ComparisonMetrics>& metrics);
void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<ComparisonMetrics>& metrics);

}  // namespace frontiers::bench
