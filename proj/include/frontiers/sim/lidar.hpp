#pragma once

#include <vector>

#include "frontiers/sim/world.hpp"

namespace frontiers::sim {

struct SensorModel {
  double range = 8.0;
  double fov = M_PI;
  int beams = 180;

  void validate() const {
    if (range <= 0.0) throw std::invalid_argument("SensorModel: range must be > 0");
    if (fov <= 0.0 || fov > 2.0 * M_PI)
      throw std::invalid_argument("SensorModel: fov must be in (0, 2*pi]");
    if (beams < 2) throw std::invalid_argument("SensorModel: need at least 2 beams");
  }
};

/// One beam: bearing is relative to the robot heading, range is the hit
/// distance or the sensor cap when nothing was struck.
struct Beam {
  double bearing = 0.0;
  double range = 0.0;
  bool hit = false;
};

/// Marches `beams` evenly spaced rays across the fov (centered on the pose
/// heading) through the truth raster, visiting every crossed cell, and
/// reports the entry distance of the first Occupied cell per ray, capped at
/// the sensor range. Rays leaving the raster return the cap. Throws if the
/// pose stands on a non-Free cell.
std::vector<Beam> raycast_scan(const World& world, const Pose2D& true_pose,
                               const SensorModel& sensor);

}  // namespace frontiers::sim
