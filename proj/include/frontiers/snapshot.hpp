#pragma once

#include <filesystem>

#include "frontiers/submap_graph.hpp"

namespace frontiers {

/// Replay format for the submap graph: one PGM + JSON sidecar pair per
/// submap (raw grids; PGM stores labels, which is all the queries depend
/// on) plus manifest.json with ids, poses (CP/PP/CD), finished flags,
/// detection seeds and local frontier cell lists. Inflated grids are
/// rebuilt on load from the manifest's inflation radius.
struct Snapshot {
  int inflation_radius = 8;
  int connectivity = 8;
  SubmapGraph graph;
};

void save_snapshot(const SubmapGraph& graph, int inflation_radius, int connectivity,
                   const std::filesystem::path& dir);

Snapshot load_snapshot(const std::filesystem::path& dir);

}  // namespace frontiers
