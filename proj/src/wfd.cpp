#include "frontiers/wfd.hpp"

#include <algorithm>
#include <queue>

namespace frontiers {

namespace {

constexpr int kOffsets8[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                 {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
constexpr int kOffsets4[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};

template <typename Fn>
void for_each_neighbor(const Cell& c, Connectivity conn, Fn&& fn) {
  if (conn == Connectivity::Eight) {
    for (const auto& d : kOffsets8) fn(Cell(c.x() + d[0], c.y() + d[1]));
  } else {
    for (const auto& d : kOffsets4) fn(Cell(c.x() + d[0], c.y() + d[1]));
  }
}

enum class Mark : unsigned char { None, MapOpen, MapClosed, FrontierOpen, FrontierClosed };

}  // namespace

bool LocalFrontierSet::contains(const Cell& c) const {
  return std::binary_search(points.begin(), points.end(), c, cell_less);
}

bool is_frontier_cell(const OccupancyGrid& grid, const Cell& c, Connectivity conn) {
  if (grid.label(c) != CellLabel::Free) return false;
  bool unknown_neighbor = false;
  for_each_neighbor(c, conn, [&](const Cell& n) {
    if (grid.contains(n) && grid.label(n) == CellLabel::Unknown) unknown_neighbor = true;
  });
  return unknown_neighbor;
}

LocalFrontierSet detect_local_frontiers(const OccupancyGrid& grid, const Cell& seed,
                                        Connectivity conn, int submap_id) {
  if (!grid.contains(seed))
    throw std::invalid_argument("detect_local_frontiers: seed out of bounds");
  if (grid.label(seed) != CellLabel::Free)
    throw std::invalid_argument("detect_local_frontiers: seed cell is not Free");

  std::vector<Mark> marks(static_cast<size_t>(grid.width()) * grid.height(), Mark::None);
  auto mark = [&](const Cell& c) -> Mark& {
    return marks[static_cast<size_t>(c.y()) * grid.width() + c.x()];
  };

  LocalFrontierSet result;
  result.submap_id = submap_id;

  std::queue<Cell> map_queue;
  map_queue.push(seed);
  mark(seed) = Mark::MapOpen;

  while (!map_queue.empty()) {
    const Cell p = map_queue.front();
    map_queue.pop();
    if (mark(p) == Mark::MapClosed) continue;

    if (is_frontier_cell(grid, p, conn)) {
      // Inner BFS: walk the contiguous frontier segment. Frontier cells are
      // Free, so everything reached here stays reachable from the seed.
      std::queue<Cell> frontier_queue;
      std::vector<Cell> segment;
      frontier_queue.push(p);
      mark(p) = Mark::FrontierOpen;
      while (!frontier_queue.empty()) {
        const Cell q = frontier_queue.front();
        frontier_queue.pop();
        if (mark(q) == Mark::FrontierClosed) continue;
        segment.push_back(q);
        for_each_neighbor(q, conn, [&](const Cell& w) {
          if (!grid.contains(w)) return;
          const Mark m = mark(w);
          if (is_frontier_cell(grid, w, conn)) {
            if (m != Mark::FrontierOpen && m != Mark::FrontierClosed && m != Mark::MapClosed) {
              frontier_queue.push(w);
              mark(w) = Mark::FrontierOpen;
            }
          } else if (m == Mark::None && grid.label(w) == CellLabel::Free) {
            // Segment cells close as visited below; the outer search must
            // still flow through them into free space behind the segment.
            map_queue.push(w);
            mark(w) = Mark::MapOpen;
          }
        });
        mark(q) = Mark::FrontierClosed;
      }
      for (const Cell& c : segment) mark(c) = Mark::MapClosed;
      result.points.insert(result.points.end(), segment.begin(), segment.end());
    }

    for_each_neighbor(p, conn, [&](const Cell& v) {
      if (!grid.contains(v)) return;
      const Mark m = mark(v);
      if (m != Mark::None) return;
      if (grid.label(v) == CellLabel::Free) {
        map_queue.push(v);
        mark(v) = Mark::MapOpen;
      }
    });
    mark(p) = Mark::MapClosed;
  }

  std::sort(result.points.begin(), result.points.end(), cell_less);
  result.points.erase(std::unique(result.points.begin(), result.points.end(),
                                  [](const Cell& a, const Cell& b) {
                                    return a.x() == b.x() && a.y() == b.y();
                                  }),
                      result.points.end());
  return result;
}

std::optional<Cell> find_free_seed(const OccupancyGrid& grid, const Cell& preferred,
                                   int max_radius) {
  if (grid.contains(preferred) && grid.label(preferred) == CellLabel::Free)
    return preferred;
  std::optional<Cell> best;
  long best_d2 = static_cast<long>(max_radius) * max_radius + 1;
  for (int dy = -max_radius; dy <= max_radius; ++dy) {
    for (int dx = -max_radius; dx <= max_radius; ++dx) {
      const long d2 = static_cast<long>(dx) * dx + static_cast<long>(dy) * dy;
      if (d2 > static_cast<long>(max_radius) * max_radius) continue;
      const Cell c(preferred.x() + dx, preferred.y() + dy);
      if (!grid.contains(c) || grid.label(c) != CellLabel::Free) continue;
      if (d2 < best_d2 || (d2 == best_d2 && best && cell_less(c, *best))) {
        best = c;
        best_d2 = d2;
      }
    }
  }
  return best;
}

}  // namespace frontiers
