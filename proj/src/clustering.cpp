#include "frontiers/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "frontiers/wfd.hpp"

namespace frontiers {

namespace {

constexpr double kConvergenceShift = 1e-4;
constexpr int kMaxIterations = 100;

/// Uniform hash buckets of side `bandwidth` for radius queries.
class PointBuckets {
 public:
  PointBuckets(const std::vector<Eigen::Vector2d>& points, double bandwidth)
      : points_(points), inv_side_(1.0 / bandwidth) {
    for (size_t i = 0; i < points.size(); ++i)
      buckets_[key(points[i])].push_back(i);
  }

  /// Mean of all points within `radius` of q (at least q's own bucket ring).
  Eigen::Vector2d mean_within(const Eigen::Vector2d& q, double radius, int& count) const {
    Eigen::Vector2d sum = Eigen::Vector2d::Zero();
    count = 0;
    const double r2 = radius * radius;
    const long bx = static_cast<long>(std::floor(q.x() * inv_side_));
    const long by = static_cast<long>(std::floor(q.y() * inv_side_));
    for (long dy = -1; dy <= 1; ++dy) {
      for (long dx = -1; dx <= 1; ++dx) {
        const auto it = buckets_.find({bx + dx, by + dy});
        if (it == buckets_.end()) continue;
        for (size_t i : it->second) {
          if ((points_[i] - q).squaredNorm() <= r2) {
            sum += points_[i];
            ++count;
          }
        }
      }
    }
    return count > 0 ? Eigen::Vector2d(sum / count) : q;
  }

 private:
  struct KeyHash {
    size_t operator()(const std::pair<long, long>& k) const {
      return std::hash<long>()(k.first * 73856093L ^ k.second * 19349663L);
    }
  };
  std::pair<long, long> key(const Eigen::Vector2d& p) const {
    return {static_cast<long>(std::floor(p.x() * inv_side_)),
            static_cast<long>(std::floor(p.y() * inv_side_))};
  }

  const std::vector<Eigen::Vector2d>& points_;
  double inv_side_;
  std::unordered_map<std::pair<long, long>, std::vector<size_t>, KeyHash> buckets_;
};

bool lex_less(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
}

}  // namespace

std::vector<FrontierCluster> mean_shift(const std::vector<Eigen::Vector2d>& points,
                                        double bandwidth) {
  if (bandwidth <= 0.0) throw std::invalid_argument("mean_shift: bandwidth must be > 0");
  if (points.empty()) return {};

  const PointBuckets buckets(points, bandwidth);

  std::vector<Eigen::Vector2d> modes(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    Eigen::Vector2d mode = points[i];
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int count = 0;
      const Eigen::Vector2d next = buckets.mean_within(mode, bandwidth, count);
      const double shift = (next - mode).norm();
      mode = next;
      if (shift < kConvergenceShift) break;
    }
    modes[i] = mode;
  }

  // Merge converged modes closer than bandwidth/2; first arrival represents.
  std::vector<Eigen::Vector2d> representatives;
  const double merge2 = (bandwidth / 2.0) * (bandwidth / 2.0);
  for (const Eigen::Vector2d& mode : modes) {
    bool merged = false;
    for (const Eigen::Vector2d& rep : representatives) {
      if ((mode - rep).squaredNorm() < merge2) {
        merged = true;
        break;
      }
    }
    if (!merged) representatives.push_back(mode);
  }

  std::vector<FrontierCluster> clusters(representatives.size());
  for (size_t i = 0; i < points.size(); ++i) {
    size_t best = 0;
    double best_d2 = (modes[i] - representatives[0]).squaredNorm();
    for (size_t r = 1; r < representatives.size(); ++r) {
      const double d2 = (modes[i] - representatives[r]).squaredNorm();
      if (d2 < best_d2) {
        best_d2 = d2;
        best = r;
      }
    }
    clusters[best].members.push_back(points[i]);
  }

  // Drop representatives that attracted nobody (possible after merging).
  std::erase_if(clusters, [](const FrontierCluster& c) { return c.members.empty(); });
  for (FrontierCluster& c : clusters) {
    Eigen::Vector2d sum = Eigen::Vector2d::Zero();
    for (const auto& m : c.members) sum += m;
    c.centroid = sum / static_cast<double>(c.members.size());
  }
  return clusters;
}

std::vector<std::vector<Eigen::Vector2d>> refine_by_connectivity(const FrontierCluster& cluster,
                                                                 const OccupancyGrid& fused) {
  std::vector<Cell> member_cells(cluster.members.size());
  for (size_t i = 0; i < cluster.members.size(); ++i) {
    const auto cell = fused.world_to_cell(cluster.members[i]);
    if (!cell)
      throw std::invalid_argument("refine_by_connectivity: member point off the fused grid");
    member_cells[i] = *cell;
  }

  // Flood the non-Occupied subgraph from each unvisited member cell and tag
  // everything reached with a component id.
  std::vector<int> component_of(static_cast<size_t>(fused.width()) * fused.height(), -1);
  auto idx = [&](const Cell& c) {
    return static_cast<size_t>(c.y()) * fused.width() + c.x();
  };
  int next_component = 0;
  for (const Cell& start : member_cells) {
    if (component_of[idx(start)] != -1) continue;
    if (fused.label(start) == CellLabel::Occupied) {
      component_of[idx(start)] = next_component++;  // isolated: occupied cells join nothing
      continue;
    }
    const int comp = next_component++;
    std::queue<Cell> queue;
    queue.push(start);
    component_of[idx(start)] = comp;
    while (!queue.empty()) {
      const Cell c = queue.front();
      queue.pop();
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const Cell n(c.x() + dx, c.y() + dy);
          if (!fused.contains(n) || component_of[idx(n)] != -1) continue;
          if (fused.label(n) == CellLabel::Occupied) continue;
          component_of[idx(n)] = comp;
          queue.push(n);
        }
      }
    }
  }

  std::vector<std::vector<Eigen::Vector2d>> components(static_cast<size_t>(next_component));
  for (size_t i = 0; i < cluster.members.size(); ++i)
    components[static_cast<size_t>(component_of[idx(member_cells[i])])].push_back(
        cluster.members[i]);
  std::erase_if(components, [](const auto& c) { return c.empty(); });
  return components;
}

NavigationPoint select_navigation_point(const std::vector<Eigen::Vector2d>& component,
                                        const Pose2D& robot, const OccupancyGrid& fused) {
  (void)fused;
  if (component.empty())
    throw std::invalid_argument("select_navigation_point: empty component");
  const Eigen::Vector2d robot_pos = robot.translation();
  const Eigen::Vector2d* best = &component.front();
  double best_d2 = (component.front() - robot_pos).squaredNorm();
  for (const Eigen::Vector2d& p : component) {
    const double d2 = (p - robot_pos).squaredNorm();
    if (d2 < best_d2 || (d2 == best_d2 && lex_less(p, *best))) {
      best = &p;
      best_d2 = d2;
    }
  }
  NavigationPoint nav;
  nav.point = *best;
  nav.component_size = static_cast<int>(component.size());
  return nav;
}

namespace {

double unknown_fraction(const OccupancyGrid& fused, const Eigen::Vector2d& point,
                        double window) {
  const int half = std::max(0, static_cast<int>(std::round(window / fused.resolution())));
  const auto center = fused.world_to_cell(point);
  // A window hanging past the raster counts those cells as Unknown: nothing
  // has observed them.
  const Cell c = center.value_or(Cell(-1, -1));
  long unknown = 0;
  long total = 0;
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      ++total;
      const Cell n(c.x() + dx, c.y() + dy);
      if (!center || !fused.contains(n) || fused.label(n) == CellLabel::Unknown) ++unknown;
    }
  }
  return total > 0 ? static_cast<double>(unknown) / static_cast<double>(total) : 0.0;
}

}  // namespace

std::vector<NavigationPoint> prioritize(std::vector<NavigationPoint> nav_points,
                                        const Pose2D& robot, const OccupancyGrid& fused,
                                        double window, double lambda) {
  if (window <= 0.0) throw std::invalid_argument("prioritize: window must be > 0");
  const Eigen::Vector2d robot_pos = robot.translation();
  for (NavigationPoint& nav : nav_points) {
    const double u = unknown_fraction(fused, nav.point, window);
    const double d = (nav.point - robot_pos).norm();
    nav.score = lambda * u - d;
  }
  std::stable_sort(nav_points.begin(), nav_points.end(),
                   [](const NavigationPoint& a, const NavigationPoint& b) {
                     return a.score > b.score;
                   });
  return nav_points;
}

std::vector<NavigationPoint> make_navigation_points(
    const std::vector<Eigen::Vector2d>& candidates, const OccupancyGrid& fused,
    const Pose2D& robot, const ClusterParams& params) {
  const auto robot_cell = fused.world_to_cell(robot.translation());
  if (!robot_cell)
    throw std::invalid_argument("make_navigation_points: robot is off the fused grid");

  // Reachability mask: everything non-Occupied-connected to the robot cell.
  std::vector<char> reachable(static_cast<size_t>(fused.width()) * fused.height(), 0);
  auto idx = [&](const Cell& c) {
    return static_cast<size_t>(c.y()) * fused.width() + c.x();
  };
  if (fused.label(*robot_cell) != CellLabel::Occupied) {
    std::queue<Cell> queue;
    queue.push(*robot_cell);
    reachable[idx(*robot_cell)] = 1;
    while (!queue.empty()) {
      const Cell c = queue.front();
      queue.pop();
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const Cell n(c.x() + dx, c.y() + dy);
          if (!fused.contains(n) || reachable[idx(n)]) continue;
          if (fused.label(n) == CellLabel::Occupied) continue;
          reachable[idx(n)] = 1;
          queue.push(n);
        }
      }
    }
  }

  // Keep only points that are still frontier cells of the fused map and
  // reachable from the robot; stabbing checks the point itself, not its
  // neighborhood, so co-aligned submaps can have observed the surroundings.
  std::vector<Eigen::Vector2d> filtered;
  filtered.reserve(candidates.size());
  for (const Eigen::Vector2d& p : candidates) {
    const auto cell = fused.world_to_cell(p);
    if (!cell) continue;
    if (!reachable[idx(*cell)]) continue;
    if (!is_frontier_cell(fused, *cell, Connectivity::Eight)) continue;
    filtered.push_back(p);
  }

  std::vector<NavigationPoint> nav_points;
  for (const FrontierCluster& cluster : mean_shift(filtered, params.bandwidth))
    for (const auto& component : refine_by_connectivity(cluster, fused))
      nav_points.push_back(select_navigation_point(component, robot, fused));
  return prioritize(std::move(nav_points), robot, fused, params.window, params.lambda);
}

}  // namespace frontiers
