#include "frontiers/sim/lidar.hpp"

namespace frontiers::sim {

std::vector<Beam> raycast_scan(const World& world, const Pose2D& true_pose,
                               const SensorModel& sensor) {
  sensor.validate();
  const auto pose_cell = world.truth.world_to_cell(true_pose.translation());
  if (!pose_cell || world.truth.label(*pose_cell) != CellLabel::Free)
    throw std::invalid_argument("raycast_scan: pose is not in free space");

  std::vector<Beam> scan(static_cast<size_t>(sensor.beams));
  for (int b = 0; b < sensor.beams; ++b) {
    const double bearing = -sensor.fov / 2.0 + sensor.fov * b / (sensor.beams - 1);
    const double heading = true_pose.theta + bearing;
    const Eigen::Vector2d dir(std::cos(heading), std::sin(heading));

    Beam beam;
    beam.bearing = bearing;
    beam.range = sensor.range;
    for_each_cell_on_segment(
        world.truth, true_pose.translation(),
        true_pose.translation() + dir * sensor.range, [&](const Cell& cell, double t) {
          if (!world.truth.contains(cell)) return false;  // nothing to hit out there
          if (world.truth.label(cell) == CellLabel::Occupied) {
            beam.range = t;  // distance to the cell's entry face
            beam.hit = true;
            return false;
          }
          return true;
        });
    scan[static_cast<size_t>(b)] = beam;
  }
  return scan;
}

}  // namespace frontiers::sim
