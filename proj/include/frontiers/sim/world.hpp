#pragma once

#include <filesystem>

#include "frontiers/grid.hpp"

namespace frontiers::sim {

/// Ground-truth raster: Free/Occupied only, no Unknown, plus the robot's
/// start pose in the raster's world frame (grid origin is identity).
struct World {
  OccupancyGrid truth;
  Pose2D start;

  /// Checks the truth grid holds no Unknown cells and the start cell is
  /// Free with `clearance` cells of free disc around it.
  void validate(int clearance) const;
};

/// World files: PGM (white = Free, black = Occupied) plus a JSON sidecar
/// carrying the start pose and resolution.
World load_world(const std::filesystem::path& pgm_path);
void save_world(const World& world, const std::filesystem::path& pgm_path);

}  // namespace frontiers::sim
