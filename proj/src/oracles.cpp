#include "frontiers/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace frontiers::oracles {

namespace {

std::vector<char> flood(const OccupancyGrid& grid, const Cell& seed, int connectivity,
                        bool free_only) {
  std::vector<char> visited(static_cast<size_t>(grid.width()) * grid.height(), 0);
  auto idx = [&](int x, int y) { return static_cast<size_t>(y) * grid.width() + x; };
  auto traversable = [&](int x, int y) {
    const CellLabel l = grid.label(x, y);
    return free_only ? l == CellLabel::Free : l != CellLabel::Occupied;
  };
  if (!grid.contains(seed) || !traversable(seed.x(), seed.y())) return visited;

  std::queue<Cell> queue;
  queue.push(seed);
  visited[idx(seed.x(), seed.y())] = 1;
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        if (connectivity == 4 && dx != 0 && dy != 0) continue;
        const int nx = c.x() + dx;
        const int ny = c.y() + dy;
        if (!grid.contains(nx, ny) || visited[idx(nx, ny)]) continue;
        if (!traversable(nx, ny)) continue;
        visited[idx(nx, ny)] = 1;
        queue.push(Cell(nx, ny));
      }
    }
  }
  return visited;
}

}  // namespace

std::vector<Cell> frontier_cells(const OccupancyGrid& grid, const Cell& seed,
                                 int connectivity) {
  const std::vector<char> reachable = flood(grid, seed, connectivity, /*free_only=*/true);
  std::vector<Cell> result;
  for (int cy = 0; cy < grid.height(); ++cy) {
    for (int cx = 0; cx < grid.width(); ++cx) {
      if (!reachable[static_cast<size_t>(cy) * grid.width() + cx]) continue;
      if (grid.label(cx, cy) != CellLabel::Free) continue;
      bool unknown_neighbor = false;
      for (int dy = -1; dy <= 1 && !unknown_neighbor; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (connectivity == 4 && dx != 0 && dy != 0) continue;
          const int nx = cx + dx;
          const int ny = cy + dy;
          if (grid.contains(nx, ny) && grid.label(nx, ny) == CellLabel::Unknown) {
            unknown_neighbor = true;
            break;
          }
        }
      }
      if (unknown_neighbor) result.emplace_back(cx, cy);
    }
  }
  std::sort(result.begin(), result.end(), cell_less);
  return result;
}

std::vector<CellLabel> inflate_labels(const OccupancyGrid& grid, int radius) {
  std::vector<CellLabel> labels(static_cast<size_t>(grid.width()) * grid.height());
  for (int cy = 0; cy < grid.height(); ++cy) {
    for (int cx = 0; cx < grid.width(); ++cx) {
      CellLabel label = grid.label(cx, cy);
      if (label != CellLabel::Occupied) {
        bool near_occupied = false;
        for (int oy = 0; oy < grid.height() && !near_occupied; ++oy) {
          for (int ox = 0; ox < grid.width(); ++ox) {
            if (grid.label(ox, oy) != CellLabel::Occupied) continue;
            const long dx = ox - cx;
            const long dy = oy - cy;
            if (dx * dx + dy * dy <= static_cast<long>(radius) * radius) {
              near_occupied = true;
              break;
            }
          }
        }
        if (near_occupied) label = CellLabel::Occupied;
      }
      labels[static_cast<size_t>(cy) * grid.width() + cx] = label;
    }
  }
  return labels;
}

std::vector<Cell> stabbing_survivors_all_pairs(const SubmapGraph& graph, int id) {
  const Submap& s = graph.submap(id);
  std::vector<Cell> survivors;
  for (const Cell& f : s.local_frontiers.points) {
    // Transform by hand: cell center -> submap frame -> world.
    const double res = s.raw.resolution();
    const Pose2D grid_origin = s.raw.origin();
    const double lx = (f.x() + 0.5) * res;
    const double ly = (f.y() + 0.5) * res;
    const double gx = grid_origin.x + std::cos(grid_origin.theta) * lx -
                      std::sin(grid_origin.theta) * ly;
    const double gy = grid_origin.y + std::sin(grid_origin.theta) * lx +
                      std::cos(grid_origin.theta) * ly;
    const Pose2D cp = s.current_pose;
    const double wx = cp.x + std::cos(cp.theta) * gx - std::sin(cp.theta) * gy;
    const double wy = cp.y + std::sin(cp.theta) * gx + std::cos(cp.theta) * gy;

    bool alive = true;
    for (int j = 0; j < graph.count() && alive; ++j) {
      if (j == id) continue;
      const Submap& other = graph.submap(j);
      // world -> other submap frame -> other grid frame, inverted by hand.
      const Pose2D ocp = other.current_pose;
      const double sx = std::cos(-ocp.theta) * (wx - ocp.x) - std::sin(-ocp.theta) * (wy - ocp.y);
      const double sy = std::sin(-ocp.theta) * (wx - ocp.x) + std::cos(-ocp.theta) * (wy - ocp.y);
      const Pose2D oo = other.inflated.origin();
      const double ox = std::cos(-oo.theta) * (sx - oo.x) - std::sin(-oo.theta) * (sy - oo.y);
      const double oy = std::sin(-oo.theta) * (sx - oo.x) + std::cos(-oo.theta) * (sy - oo.y);
      const int cx = static_cast<int>(std::floor(ox / other.inflated.resolution()));
      const int cy = static_cast<int>(std::floor(oy / other.inflated.resolution()));
      if (cx < 0 || cy < 0 || cx >= other.inflated.width() || cy >= other.inflated.height())
        continue;
      if (other.inflated.label(cx, cy) == CellLabel::Unknown) continue;
      const bool member = std::any_of(
          other.local_frontiers.points.begin(), other.local_frontiers.points.end(),
          [&](const Cell& c) { return c.x() == cx && c.y() == cy; });
      if (member) continue;
      alive = false;
    }
    if (alive) survivors.push_back(f);
  }
  return survivors;
}

bool path_exists(const OccupancyGrid& grid, const Cell& from, const Cell& to,
                 bool free_only) {
  if (!grid.contains(from) || !grid.contains(to)) return false;
  const std::vector<char> visited = flood(grid, from, 8, free_only);
  return visited[static_cast<size_t>(to.y()) * grid.width() + to.x()] != 0;
}

}  // namespace frontiers::oracles
