#include "frontiers/sim/planner.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace frontiers::sim {

namespace {

constexpr double kDiag = 1.4142135623730951;

double octile(const Cell& a, const Cell& b) {
  const double dx = std::abs(a.x() - b.x());
  const double dy = std::abs(a.y() - b.y());
  return (dx + dy) + (kDiag - 2.0) * std::min(dx, dy);
}

}  // namespace

std::optional<std::vector<Eigen::Vector2d>> plan_path(const OccupancyGrid& inflated,
                                                      const Pose2D& from,
                                                      const Eigen::Vector2d& to) {
  const auto start = inflated.world_to_cell(from.translation());
  if (!start || inflated.label(*start) != CellLabel::Free)
    throw std::invalid_argument("plan_path: start cell is not Free on the inflated map");
  const auto goal = inflated.world_to_cell(to);
  if (!goal || inflated.label(*goal) == CellLabel::Occupied) return std::nullopt;

  const int w = inflated.width();
  const int h = inflated.height();
  auto idx = [&](const Cell& c) { return static_cast<size_t>(c.y()) * w + c.x(); };

  std::vector<double> g(static_cast<size_t>(w) * h, std::numeric_limits<double>::infinity());
  std::vector<int> parent(static_cast<size_t>(w) * h, -1);
  std::vector<char> closed(static_cast<size_t>(w) * h, 0);

  struct Node {
    double f;
    double g;
    int cell;
  };
  auto cmp = [](const Node& a, const Node& b) {
    return a.f != b.f ? a.f > b.f : a.cell > b.cell;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);

  g[idx(*start)] = 0.0;
  open.push({octile(*start, *goal), 0.0, static_cast<int>(idx(*start))});

  while (!open.empty()) {
    const Node node = open.top();
    open.pop();
    const int ci = node.cell;
    if (closed[static_cast<size_t>(ci)]) continue;
    closed[static_cast<size_t>(ci)] = 1;
    const Cell c(ci % w, ci / w);
    if (c.x() == goal->x() && c.y() == goal->y()) break;

    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const Cell n(c.x() + dx, c.y() + dy);
        if (!inflated.contains(n) || inflated.label(n) == CellLabel::Occupied) continue;
        const size_t ni = idx(n);
        if (closed[ni]) continue;
        const double cost = (dx != 0 && dy != 0) ? kDiag : 1.0;
        const double tentative = node.g + cost;
        if (tentative < g[ni]) {
          g[ni] = tentative;
          parent[ni] = ci;
          open.push({tentative + octile(n, *goal), tentative, static_cast<int>(ni)});
        }
      }
    }
  }

  if (!closed[idx(*goal)]) return std::nullopt;

  std::vector<Eigen::Vector2d> waypoints;
  for (int ci = static_cast<int>(idx(*goal)); ci != -1; ci = parent[static_cast<size_t>(ci)])
    waypoints.push_back(inflated.cell_center_world(Cell(ci % w, ci / w)));
  std::reverse(waypoints.begin(), waypoints.end());
  return waypoints;
}

double path_length(const std::vector<Eigen::Vector2d>& waypoints) {
  double length = 0.0;
  for (size_t i = 1; i < waypoints.size(); ++i)
    length += (waypoints[i] - waypoints[i - 1]).norm();
  return length;
}

}  // namespace frontiers::sim
