#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frontiers/geometry.hpp"

namespace frontiers {

/// Three-way occupancy labeling. There is no fourth state.
enum class CellLabel { Free, Occupied, Unknown };

/// Occupancy prior for unobserved cells. Stored exactly so the Unknown
/// branch of the labeling is a well-defined equality; any scan update
/// moves a cell off 0.5 permanently.
inline constexpr float kPriorProbability = 0.5f;

/// Labels a probability: Free below the prior, Occupied above, Unknown at
/// exactly the prior. Rejects values outside [0, 1].
inline CellLabel label_cell(float p) {
  if (!(p >= 0.0f && p <= 1.0f))
    throw std::invalid_argument("label_cell: probability outside [0, 1]");
  if (p < kPriorProbability) return CellLabel::Free;
  if (p > kPriorProbability) return CellLabel::Occupied;
  return CellLabel::Unknown;
}

using Cell = Eigen::Vector2i;

/// Row-major ordering for cell sets: (cy, cx).
inline bool cell_less(const Cell& a, const Cell& b) {
  return a.y() != b.y() ? a.y() < b.y() : a.x() < b.x();
}

/// Dense 2D raster of occupancy probabilities. `origin` is the pose of the
/// corner of cell (0, 0) in the grid's parent frame (world for standalone
/// grids, the submap frame for submap grids). Cell (cx, cy) spans
/// [cx*res, (cx+1)*res) x [cy*res, (cy+1)*res) in origin-local coordinates.
class OccupancyGrid {
 public:
  using Raster = Eigen::Array<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  OccupancyGrid() = default;
  OccupancyGrid(int width, int height, double resolution = 0.05, const Pose2D& origin = {})
      : width_(width), height_(height), resolution_(resolution), origin_(origin) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("OccupancyGrid: non-positive dimensions");
    if (resolution <= 0.0)
      throw std::invalid_argument("OccupancyGrid: non-positive resolution");
    cells_ = Raster::Constant(height, width, kPriorProbability);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }
  void set_origin(const Pose2D& origin) { origin_ = origin; }

  bool contains(int cx, int cy) const {
    return cx >= 0 && cy >= 0 && cx < width_ && cy < height_;
  }
  bool contains(const Cell& c) const { return contains(c.x(), c.y()); }

  float at(int cx, int cy) const { return cells_(cy, cx); }
  float at(const Cell& c) const { return at(c.x(), c.y()); }

  void set(int cx, int cy, float p) {
    if (!(p >= 0.0f && p <= 1.0f))
      throw std::invalid_argument("OccupancyGrid::set: probability outside [0, 1]");
    cells_(cy, cx) = p;
  }
  void set(const Cell& c, float p) { set(c.x(), c.y(), p); }

  CellLabel label(int cx, int cy) const { return label_cell(at(cx, cy)); }
  CellLabel label(const Cell& c) const { return label(c.x(), c.y()); }

  const Raster& cells() const { return cells_; }

  /// Maps a point in the grid's parent frame to a cell index, or nullopt
  /// when the point lies outside the raster.
  std::optional<Cell> world_to_cell(const Eigen::Vector2d& point) const {
    const Eigen::Vector2d local = origin_.inverse() * point;
    const double fx = std::floor(local.x() / resolution_);
    const double fy = std::floor(local.y() / resolution_);
    if (fx < 0 || fy < 0 || fx >= width_ || fy >= height_) return std::nullopt;
    return Cell(static_cast<int>(fx), static_cast<int>(fy));
  }

  /// Center of a cell in origin-local coordinates.
  Eigen::Vector2d cell_center_local(const Cell& c) const {
    return {(c.x() + 0.5) * resolution_, (c.y() + 0.5) * resolution_};
  }

  /// Center of a cell in the grid's parent frame.
  Eigen::Vector2d cell_center_world(const Cell& c) const {
    return origin_ * cell_center_local(c);
  }

  bool operator==(const OccupancyGrid& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           resolution_ == other.resolution_ && origin_ == other.origin_ &&
           (cells_ == other.cells_).all();
  }

 private:
  int width_ = 0;
  int height_ = 0;
  double resolution_ = 0.05;
  Pose2D origin_;
  Raster cells_;
};

/// Euclidean-disc dilation of the Occupied region: every cell whose center
/// lies within `radius` cells of an Occupied cell's center becomes Occupied
/// (canonical probability 1.0), including Unknown cells inside a disc.
/// Cells outside all discs are untouched.
OccupancyGrid inflate(const OccupancyGrid& grid, int radius);

/// Offsets (dx, dy) with dx^2 + dy^2 <= radius^2, row-major order.
std::vector<Cell> disc_offsets(int radius);

/// Walks every cell the segment [from, to] (parent-frame points) crosses,
/// in traversal order, skipping none (Amanatides-Woo stepping). `fn` gets
/// the cell (possibly outside the raster; callers filter) and the entry
/// distance along the segment in meters; returning false stops the walk.
template <typename Fn>
void for_each_cell_on_segment(const OccupancyGrid& grid, const Eigen::Vector2d& from,
                              const Eigen::Vector2d& to, Fn&& fn) {
  const double res = grid.resolution();
  const Pose2D inv = grid.origin().inverse();
  const Eigen::Vector2d a = (inv * from) / res;
  const Eigen::Vector2d b = (inv * to) / res;
  const Eigen::Vector2d d = b - a;
  const double length = (to - from).norm();

  int x = static_cast<int>(std::floor(a.x()));
  int y = static_cast<int>(std::floor(a.y()));
  const int end_x = static_cast<int>(std::floor(b.x()));
  const int end_y = static_cast<int>(std::floor(b.y()));

  const int step_x = d.x() > 0 ? 1 : -1;
  const int step_y = d.y() > 0 ? 1 : -1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double t_max_x = d.x() != 0
                       ? ((x + (step_x > 0 ? 1.0 : 0.0)) - a.x()) / d.x()
                       : kInf;
  double t_max_y = d.y() != 0
                       ? ((y + (step_y > 0 ? 1.0 : 0.0)) - a.y()) / d.y()
                       : kInf;
  const double t_delta_x = d.x() != 0 ? std::abs(1.0 / d.x()) : kInf;
  const double t_delta_y = d.y() != 0 ? std::abs(1.0 / d.y()) : kInf;

  if (!fn(Cell(x, y), 0.0)) return;
  long guard = std::abs(end_x - x) + std::abs(end_y - y) + 4;
  while ((x != end_x || y != end_y) && guard-- > 0) {
    double t;
    if (t_max_x < t_max_y) {
      t = t_max_x;
      x += step_x;
      t_max_x += t_delta_x;
    } else {
      t = t_max_y;
      y += step_y;
      t_max_y += t_delta_y;
    }
    if (t > 1.0) break;
    if (!fn(Cell(x, y), t * length)) return;
  }
}

}  // namespace frontiers
