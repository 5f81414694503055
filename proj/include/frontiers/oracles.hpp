#pragma once

#include <set>
#include <vector>

#include "frontiers/submap_graph.hpp"

namespace frontiers::oracles {

/// Reference implementations used to verify the fast paths. Everything here
/// is written from the definitions — exhaustive scans, plain flood fills,
/// all-pairs checks — and deliberately shares no code with the
/// implementations it audits.

/// { c : label(c) = Free, some neighbor Unknown, c reachable from seed over
/// Free cells } computed by a plain flood fill plus an exhaustive scan.
std::vector<Cell> frontier_cells(const OccupancyGrid& grid, const Cell& seed,
                                 int connectivity = 8);

/// Disc dilation by direct distance checks over all cell pairs; returns the
/// label raster (row-major, cy * width + cx).
std::vector<CellLabel> inflate_labels(const OccupancyGrid& grid, int radius);

/// Stabbing survivors of submap `id` checked against ALL other submaps, no
/// bounding-box pruning.
std::vector<Cell> stabbing_survivors_all_pairs(const SubmapGraph& graph, int id);

/// Whether an 8-connected path of traversable cells links `from` to `to`.
/// Traversable means label != Occupied when `free_only` is false, or
/// label == Free when true.
bool path_exists(const OccupancyGrid& grid, const Cell& from, const Cell& to,
                 bool free_only);

}  // namespace frontiers::oracles
