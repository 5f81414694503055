#include "frontiers/sim/world.hpp"

#include <fstream>

#include <json.hpp>

#include "frontiers/grid_io.hpp"

namespace frontiers::sim {

void World::validate(int clearance) const {
  for (int cy = 0; cy < truth.height(); ++cy)
    for (int cx = 0; cx < truth.width(); ++cx)
      if (truth.label(cx, cy) == CellLabel::Unknown)
        throw std::runtime_error("world: truth grid contains Unknown cells");

  const auto start_cell = truth.world_to_cell(start.translation());
  if (!start_cell) throw std::runtime_error("world: start pose outside the raster");
  const long r2 = static_cast<long>(clearance) * clearance;
  for (int dy = -clearance; dy <= clearance; ++dy) {
    for (int dx = -clearance; dx <= clearance; ++dx) {
      if (static_cast<long>(dx) * dx + static_cast<long>(dy) * dy > r2) continue;
      const Cell c(start_cell->x() + dx, start_cell->y() + dy);
      if (!truth.contains(c) || truth.label(c) != CellLabel::Free)
        throw std::runtime_error("world: start lacks the required free clearance");
    }
  }
}

World load_world(const std::filesystem::path& pgm_path) {
  World world;
  world.truth = load_grid_pgm(pgm_path);
  const auto side = sidecar_path(pgm_path);
  std::ifstream js(side);
  if (!js) throw std::runtime_error("cannot read world sidecar " + side.string());
  nlohmann::json j;
  js >> j;
  if (j.contains("start")) {
    const auto& s = j.at("start");
    world.start = {s.at("x").get<double>(), s.at("y").get<double>(),
                   s.at("theta").get<double>()};
  }
  for (int cy = 0; cy < world.truth.height(); ++cy)
    for (int cx = 0; cx < world.truth.width(); ++cx)
      if (world.truth.label(cx, cy) == CellLabel::Unknown)
        throw std::runtime_error(pgm_path.string() + ": world rasters may not hold gray (128)");
  return world;
}

void save_world(const World& world, const std::filesystem::path& pgm_path) {
  save_grid_pgm(world.truth, pgm_path);
  // Rewrite the sidecar with the start pose included.
  nlohmann::json j = {{"resolution", world.truth.resolution()},
                      {"origin",
                       {{"x", world.truth.origin().x},
                        {"y", world.truth.origin().y},
                        {"theta", world.truth.origin().theta}}},
                      {"start",
                       {{"x", world.start.x}, {"y", world.start.y}, {"theta", world.start.theta}}}};
  std::ofstream js(sidecar_path(pgm_path));
  js << j.dump() << "\n";
}

}  // namespace frontiers::sim
