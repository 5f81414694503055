#include "frontiers/submap_graph.hpp"

#include <cmath>
#include <stdexcept>

namespace frontiers {

void Submap::cache_observed_cells() {
  observed_cells.clear();
  for (int cy = 0; cy < raw.height(); ++cy)
    for (int cx = 0; cx < raw.width(); ++cx)
      if (raw.label(cx, cy) != CellLabel::Unknown)
        observed_cells.push_back({Cell(cx, cy), raw.at(cx, cy)});
}

Eigen::AlignedBox2d bounding_box(const Submap& submap) {
  const double w = submap.raw.width() * submap.raw.resolution();
  const double h = submap.raw.height() * submap.raw.resolution();
  const Pose2D to_world = submap.current_pose * submap.raw.origin();
  Eigen::AlignedBox2d box;
  for (const Eigen::Vector2d& corner :
       {Eigen::Vector2d(0, 0), Eigen::Vector2d(w, 0), Eigen::Vector2d(0, h),
        Eigen::Vector2d(w, h)})
    box.extend(to_world * corner);
  return box;
}

int SubmapGraph::add_submap(Submap submap) {
  if (submap.id != count())
    throw std::invalid_argument("SubmapGraph::add_submap: ids must be sequential");
  boxes_.push_back(bounding_box(submap));
  submaps_.push_back(std::move(submap));
  return submaps_.back().id;
}

const Submap& SubmapGraph::submap(int id) const {
  if (!has(id)) throw std::out_of_range("SubmapGraph: unknown submap id");
  return submaps_[static_cast<size_t>(id)];
}

Submap& SubmapGraph::submap(int id) {
  if (!has(id)) throw std::out_of_range("SubmapGraph: unknown submap id");
  return submaps_[static_cast<size_t>(id)];
}

const Eigen::AlignedBox2d& SubmapGraph::box(int id) const {
  if (!has(id)) throw std::out_of_range("SubmapGraph: unknown submap id");
  return boxes_[static_cast<size_t>(id)];
}

void SubmapGraph::set_current_pose(int id, const Pose2D& pose) {
  submap(id).current_pose = pose;
  boxes_[static_cast<size_t>(id)] = bounding_box(submaps_[static_cast<size_t>(id)]);
}

void SubmapGraph::recompute_boxes() {
  for (size_t i = 0; i < submaps_.size(); ++i) boxes_[i] = bounding_box(submaps_[i]);
}

std::set<int> SubmapGraph::intersecting_submaps(int id) const {
  const Eigen::AlignedBox2d& query = box(id);
  std::set<int> result;
  for (int other = 0; other < count(); ++other) {
    if (other == id) continue;
    if (query.intersects(boxes_[static_cast<size_t>(other)])) result.insert(other);
  }
  return result;
}

std::vector<Cell> SubmapGraph::stab(int id, const std::set<int>& others) const {
  const Submap& s = submap(id);
  if (!s.finished)
    throw std::invalid_argument("stabbing_query: submap is not finished");

  std::vector<Cell> survivors;
  survivors.reserve(s.local_frontiers.points.size());
  for (const Cell& f : s.local_frontiers.points) {
    const Eigen::Vector2d world = s.frontier_world(f);
    bool alive = true;
    for (int j : others) {
      const Submap& other = submaps_[static_cast<size_t>(j)];
      const Eigen::Vector2d in_other = other.current_pose.inverse() * world;
      const auto cell = other.inflated.world_to_cell(in_other);
      if (!cell) continue;  // box overlap does not imply raster coverage
      if (other.inflated.label(*cell) == CellLabel::Unknown) continue;
      if (other.local_frontiers.contains(*cell)) continue;
      alive = false;  // occluded: Free-non-frontier or Occupied in `other`
      break;
    }
    if (alive) survivors.push_back(f);
  }
  return survivors;
}

std::vector<Cell> SubmapGraph::stabbing_query(int id) {
  std::vector<Cell> survivors = stab(id, intersecting_submaps(id));
  global_frontiers_[id] = survivors;
  return survivors;
}

std::vector<Eigen::Vector2d> SubmapGraph::global_frontier_points() const {
  std::vector<Eigen::Vector2d> points;
  points.reserve(global_frontier_count());
  for (const auto& [id, cells] : global_frontiers_) {
    const Submap& s = submap(id);
    for (const Cell& c : cells) points.push_back(s.frontier_world(c));
  }
  return points;
}

std::size_t SubmapGraph::global_frontier_count() const {
  std::size_t n = 0;
  for (const auto& [id, cells] : global_frontiers_) n += cells.size();
  return n;
}

OccupancyGrid SubmapGraph::fuse_global_map() const {
  if (submaps_.empty())
    throw std::invalid_argument("fuse_global_map: graph has no submaps");

  const double res = submaps_.front().raw.resolution();
  Eigen::AlignedBox2d bounds;
  for (const auto& b : boxes_) bounds.extend(b);

  const double ox = std::floor(bounds.min().x() / res) * res;
  const double oy = std::floor(bounds.min().y() / res) * res;
  const int width = static_cast<int>(std::ceil((bounds.max().x() - ox) / res)) + 1;
  const int height = static_cast<int>(std::ceil((bounds.max().y() - oy) / res)) + 1;

  OccupancyGrid fused(width, height, res, Pose2D(ox, oy, 0.0));

  // Ids are finish order, so painting oldest-to-newest realizes the
  // "most recently finished observer wins" rule.
  for (const Submap& s : submaps_) {
    const Pose2D to_world = s.current_pose * s.raw.origin();
    const Eigen::Matrix2d rot = to_world.rotation().toRotationMatrix();
    const Eigen::Vector2d base =
        to_world * Eigen::Vector2d(0.5 * res, 0.5 * res) - Eigen::Vector2d(ox, oy);
    const Eigen::Vector2d col_step = rot.col(0) * res;
    const Eigen::Vector2d row_step = rot.col(1) * res;
    for (const auto& [cell, value] : s.observed_cells) {
      const Eigen::Vector2d p = base + col_step * cell.x() + row_step * cell.y();
      const int fx = static_cast<int>(std::floor(p.x() / res));
      const int fy = static_cast<int>(std::floor(p.y() / res));
      if (fx >= 0 && fy >= 0 && fx < width && fy < height) fused.set(fx, fy, value);
    }
  }
  return fused;
}

}  // namespace frontiers
