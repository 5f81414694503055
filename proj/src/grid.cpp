#include "frontiers/grid.hpp"

namespace frontiers {

std::vector<Cell> disc_offsets(int radius) {
  std::vector<Cell> offsets;
  const int r2 = radius * radius;
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      if (dx * dx + dy * dy <= r2) offsets.emplace_back(dx, dy);
  return offsets;
}

OccupancyGrid inflate(const OccupancyGrid& grid, int radius) {
  if (radius < 0) throw std::invalid_argument("inflate: negative radius");
  OccupancyGrid out = grid;
  const auto offsets = disc_offsets(radius);
  for (int cy = 0; cy < grid.height(); ++cy) {
    for (int cx = 0; cx < grid.width(); ++cx) {
      if (grid.label(cx, cy) != CellLabel::Occupied) continue;
      for (const Cell& d : offsets) {
        const int nx = cx + d.x();
        const int ny = cy + d.y();
        if (out.contains(nx, ny)) out.set(nx, ny, 1.0f);
      }
    }
  }
  return out;
}

}  // namespace frontiers
