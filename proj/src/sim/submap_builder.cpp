#include "frontiers/sim/submap_builder.hpp"

#include <algorithm>
#include <cmath>

namespace frontiers::sim {

SubmapBuilder::SubmapBuilder(int id, const Pose2D& anchor_estimate, const Pose2D& anchor_truth,
                             double resolution, double sensor_range, int max_scans,
                             double robot_step)
    : anchor_estimate_(anchor_estimate), anchor_truth_(anchor_truth), max_scans_(max_scans) {
  const double half = sensor_range + max_scans * robot_step + 0.5;
  const int side = 2 * static_cast<int>(std::ceil(half / resolution));
  submap_.id = id;
  submap_.raw = OccupancyGrid(side, side, resolution,
                              Pose2D(-half, -half, 0.0));  // origin in the submap frame
  submap_.current_pose = anchor_estimate;
  submap_.previous_pose = anchor_estimate;
}

void SubmapBuilder::integrate_scan(const Pose2D& estimated_pose, const std::vector<Beam>& scan) {
  if (finished_)
    throw std::logic_error("SubmapBuilder: integrating into a finished submap");

  // Scan pose relative to the submap frame; drift-free within the submap by
  // construction (poses inside a submap are rigid).
  const Pose2D in_submap = anchor_estimate_.inverse() * estimated_pose;
  const double nudge = submap_.raw.resolution() / 4.0;

  if (scan_count_ == 0) {
    const auto seed = submap_.raw.world_to_cell(in_submap.translation());
    seed_cell_ = seed.value_or(Cell(-1, -1));
  }

  for (const Beam& beam : scan) {
    const double heading = in_submap.theta + beam.bearing;
    const Eigen::Vector2d dir(std::cos(heading), std::sin(heading));
    const Eigen::Vector2d origin = in_submap.translation();

    // Ranges measure to the hit cell's entry face; bias a quarter cell
    // inward so the endpoint rasterizes inside that cell.
    std::optional<Cell> end_cell;
    if (beam.hit)
      end_cell = submap_.raw.world_to_cell(origin + dir * (beam.range + nudge));

    for_each_cell_on_segment(submap_.raw, origin, origin + dir * beam.range,
                             [&](const Cell& cell, double) {
                               if (!submap_.raw.contains(cell)) return true;
                               if (end_cell && cell.x() == end_cell->x() &&
                                   cell.y() == end_cell->y())
                                 return true;
                               submap_.raw.set(cell, 0.1f);
                               return true;
                             });
    if (end_cell) submap_.raw.set(*end_cell, 0.9f);
  }

  // The robot's own footprint is necessarily free space; stamping it keeps
  // the sensor-fov boundary from leaving the cell under the robot unknown.
  const auto center = submap_.raw.world_to_cell(in_submap.translation());
  if (center) {
    for (int dy = -2; dy <= 2; ++dy)
      for (int dx = -2; dx <= 2; ++dx)
        if (dx * dx + dy * dy <= 4 && submap_.raw.contains(center->x() + dx, center->y() + dy))
          submap_.raw.set(center->x() + dx, center->y() + dy, 0.1f);
  }

  ++scan_count_;
  if (scan_count_ >= max_scans_) finished_ = true;
}

Submap SubmapBuilder::finish(int inflation_radius, Connectivity conn) {
  finished_ = true;
  crop_to_observed(inflation_radius + 1);
  submap_.inflated = inflate(submap_.raw, inflation_radius);
  submap_.detection_seed = seed_cell_;
  submap_.local_frontiers.submap_id = submap_.id;
  const auto seed = find_free_seed(submap_.inflated, seed_cell_, 2 * inflation_radius);
  if (seed) {
    submap_.detection_seed = *seed;
    submap_.local_frontiers = detect_local_frontiers(submap_.inflated, *seed, conn, submap_.id);
  }
  submap_.finished = true;
  submap_.cache_observed_cells();
  return std::move(submap_);
}

void SubmapBuilder::crop_to_observed(int margin) {
  const OccupancyGrid& raw = submap_.raw;
  int min_x = raw.width(), min_y = raw.height(), max_x = -1, max_y = -1;
  for (int cy = 0; cy < raw.height(); ++cy) {
    for (int cx = 0; cx < raw.width(); ++cx) {
      if (raw.label(cx, cy) == CellLabel::Unknown) continue;
      min_x = std::min(min_x, cx);
      min_y = std::min(min_y, cy);
      max_x = std::max(max_x, cx);
      max_y = std::max(max_y, cy);
    }
  }
  if (max_x < 0) return;  // nothing observed, keep as built

  min_x = std::max(0, min_x - margin);
  min_y = std::max(0, min_y - margin);
  max_x = std::min(raw.width() - 1, max_x + margin);
  max_y = std::min(raw.height() - 1, max_y + margin);

  const double res = raw.resolution();
  const Pose2D old_origin = raw.origin();
  const Pose2D new_origin(old_origin.x + min_x * res, old_origin.y + min_y * res,
                          old_origin.theta);  // builder origins are axis-aligned
  OccupancyGrid cropped(max_x - min_x + 1, max_y - min_y + 1, res, new_origin);
  for (int cy = min_y; cy <= max_y; ++cy)
    for (int cx = min_x; cx <= max_x; ++cx)
      cropped.set(cx - min_x, cy - min_y, raw.at(cx, cy));
  submap_.raw = std::move(cropped);
  if (seed_cell_.x() >= 0) seed_cell_ = Cell(seed_cell_.x() - min_x, seed_cell_.y() - min_y);
}

}  // namespace frontiers::sim
