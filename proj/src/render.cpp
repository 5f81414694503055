#include "frontiers/render.hpp"

#include <cmath>

namespace frontiers {

Eigen::Vector2i render_pixel(const OccupancyGrid& fused, const Eigen::Vector2d& world) {
  const Eigen::Vector2d local = fused.origin().inverse() * world;
  const int px = static_cast<int>(std::floor(local.x() / fused.resolution()));
  const int py = static_cast<int>(std::floor(local.y() / fused.resolution()));
  return {px, fused.height() - 1 - py};
}

Image render_map(const OccupancyGrid& fused, const SubmapGraph& graph,
                 const RenderOverlays& overlays) {
  Image image(fused.width(), fused.height());
  for (int cy = 0; cy < fused.height(); ++cy) {
    for (int cx = 0; cx < fused.width(); ++cx) {
      const int py = fused.height() - 1 - cy;
      switch (fused.label(cx, cy)) {
        case CellLabel::Free: image.set(cx, py, 255, 255, 255); break;
        case CellLabel::Occupied: image.set(cx, py, 0, 0, 0); break;
        case CellLabel::Unknown: image.set(cx, py, 190, 190, 190); break;
      }
    }
  }

  // Detection span: tint the queried submaps' AABB regions.
  for (int id : overlays.queried_submaps) {
    if (!graph.has(id)) continue;
    const Eigen::AlignedBox2d& box = graph.box(id);
    const Eigen::Vector2i lo = render_pixel(fused, box.min());
    const Eigen::Vector2i hi = render_pixel(fused, box.max());
    const int x0 = std::min(lo.x(), hi.x());
    const int x1 = std::max(lo.x(), hi.x());
    const int y0 = std::min(lo.y(), hi.y());
    const int y1 = std::max(lo.y(), hi.y());
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) image.blend(x, y, 255, 0, 0, 0.25);
  }

  for (const Eigen::Vector2d& p : overlays.frontier_points) {
    const Eigen::Vector2i px = render_pixel(fused, p);
    image.set(px.x(), px.y(), 255, 0, 0);
  }

  for (size_t i = 1; i < overlays.trajectory.size(); ++i) {
    const Eigen::Vector2i a = render_pixel(fused, overlays.trajectory[i - 1]);
    const Eigen::Vector2i b = render_pixel(fused, overlays.trajectory[i]);
    image.draw_line(a.x(), a.y(), b.x(), b.y(), 60, 60, 255);
  }

  for (const Eigen::Vector2d& p : overlays.nav_points) {
    const Eigen::Vector2i px = render_pixel(fused, p);
    image.fill_disc(px.x(), px.y(), 3, 0, 0, 255);
  }
  return image;
}

}  // namespace frontiers
