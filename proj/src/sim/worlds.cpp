#include "frontiers/sim/worlds.hpp"

#include <cmath>

namespace frontiers::sim {

namespace {

OccupancyGrid blank(double width_m, double height_m, double resolution) {
  const int w = static_cast<int>(std::lround(width_m / resolution));
  const int h = static_cast<int>(std::lround(height_m / resolution));
  OccupancyGrid grid(w, h, resolution);
  for (int cy = 0; cy < h; ++cy)
    for (int cx = 0; cx < w; ++cx) grid.set(cx, cy, 0.0f);
  return grid;
}

void fill_rect(OccupancyGrid& grid, double x0, double y0, double x1, double y1, float p) {
  const double res = grid.resolution();
  const int cx0 = std::max(0, static_cast<int>(std::floor(x0 / res)));
  const int cy0 = std::max(0, static_cast<int>(std::floor(y0 / res)));
  const int cx1 = std::min(grid.width() - 1, static_cast<int>(std::ceil(x1 / res)) - 1);
  const int cy1 = std::min(grid.height() - 1, static_cast<int>(std::ceil(y1 / res)) - 1);
  for (int cy = cy0; cy <= cy1; ++cy)
    for (int cx = cx0; cx <= cx1; ++cx) grid.set(cx, cy, p);
}

void wall_border(OccupancyGrid& grid, double thickness) {
  const double w = grid.width() * grid.resolution();
  const double h = grid.height() * grid.resolution();
  fill_rect(grid, 0, 0, w, thickness, 1.0f);
  fill_rect(grid, 0, h - thickness, w, h, 1.0f);
  fill_rect(grid, 0, 0, thickness, h, 1.0f);
  fill_rect(grid, w - thickness, 0, w, h, 1.0f);
}

constexpr double kWall = 0.2;

}  // namespace

World corridor_world(double length, double width, double resolution) {
  World world;
  world.truth = blank(length + 2 * kWall, width + 2 * kWall, resolution);
  wall_border(world.truth, kWall);
  world.start = {kWall + width / 2.0, kWall + width / 2.0, 0.0};
  return world;
}

World single_room_world(double side, double resolution) {
  World world;
  world.truth = blank(side + 2 * kWall, side + 2 * kWall, resolution);
  wall_border(world.truth, kWall);
  world.start = {kWall + side / 2.0, kWall + side / 2.0, 0.0};
  return world;
}

World two_room_pinhole_world(double resolution) {
  World world;
  const double room = 6.0;
  world.truth = blank(2 * room + 3 * kWall, room + 2 * kWall, resolution);
  wall_border(world.truth, kWall);
  // Dividing wall with a one-cell slit at mid height.
  const double divider_x0 = kWall + room;
  fill_rect(world.truth, divider_x0, 0, divider_x0 + kWall, room + 2 * kWall, 1.0f);
  const double slit_y = kWall + room / 2.0;
  const int cy = static_cast<int>(std::floor(slit_y / resolution));
  for (int cx = static_cast<int>(std::floor(divider_x0 / resolution)) - 1;
       cx <= static_cast<int>(std::ceil((divider_x0 + kWall) / resolution)); ++cx)
    if (world.truth.contains(cx, cy)) world.truth.set(cx, cy, 0.0f);
  world.start = {kWall + room / 2.0, kWall + room / 2.0, 0.0};
  return world;
}

World two_loop_world(double resolution) {
  World world;
  const double width_m = 40.0;
  const double height_m = 25.0;
  const double corridor = 3.6;
  world.truth = blank(width_m, height_m, resolution);
  wall_border(world.truth, kWall);
  // Two interior blocks leave a ring corridor plus a middle bar: two loops.
  const double bar_x0 = width_m / 2.0 - corridor / 2.0;
  const double bar_x1 = width_m / 2.0 + corridor / 2.0;
  fill_rect(world.truth, kWall + corridor, kWall + corridor, bar_x0, height_m - kWall - corridor,
            1.0f);
  fill_rect(world.truth, bar_x1, kWall + corridor, width_m - kWall - corridor,
            height_m - kWall - corridor, 1.0f);
  // Starting mid-bar forces a full circuit of one loop before the other,
  // so the run revisits its oldest submaps and closes loops.
  world.start = {width_m / 2.0, height_m / 2.0, M_PI / 2.0};
  return world;
}

OccupancyGrid wall_split_frontier_map() {
  // 31x30 at 5 cm. The center column is a full-height wall; rows 0-4 are
  // unknown on both sides; everything else observed free. The dense
  // frontier is row 5 left and right of the wall, symmetric, so the
  // mean-shift mode of the straddling cluster lands inside the wall.
  OccupancyGrid grid(31, 30, 0.05);
  for (int cy = 0; cy < 30; ++cy) {
    for (int cx = 0; cx < 31; ++cx) {
      if (cx == 15)
        grid.set(cx, cy, 1.0f);
      else if (cy <= 4)
        grid.set(cx, cy, 0.5f);
      else
        grid.set(cx, cy, 0.0f);
    }
  }
  return grid;
}

}  // namespace frontiers::sim
