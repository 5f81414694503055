#pragma once

#include <filesystem>
#include <string>

#include "frontiers/grid.hpp"

namespace frontiers {

/// Grid interchange format: binary PGM (P5, maxval 255) storing labels
/// (0 = Occupied, 255 = Free, 128 = Unknown) plus a one-line JSON sidecar
/// next to it (<stem>.json) carrying resolution and origin. The writer
/// emits a canonical byte stream so save(load(f)) round-trips bit-exactly;
/// the loader rejects any pixel outside the three label values.
///
/// Raster row r of the PGM is cell row cy = r.

void save_grid_pgm(const OccupancyGrid& grid, const std::filesystem::path& pgm_path);
OccupancyGrid load_grid_pgm(const std::filesystem::path& pgm_path);

/// PGM bytes only, without touching the sidecar.
std::string encode_pgm(const OccupancyGrid& grid);

std::filesystem::path sidecar_path(const std::filesystem::path& pgm_path);

}  // namespace frontiers
