#include "frontiers/grid_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace frontiers {

namespace {

constexpr unsigned char kOccupiedPixel = 0;
constexpr unsigned char kFreePixel = 255;
constexpr unsigned char kUnknownPixel = 128;

unsigned char pixel_from_label(CellLabel label) {
  switch (label) {
    case CellLabel::Occupied: return kOccupiedPixel;
    case CellLabel::Free: return kFreePixel;
    case CellLabel::Unknown: return kUnknownPixel;
  }
  return kUnknownPixel;
}

float probability_from_pixel(unsigned char pixel) {
  switch (pixel) {
    case kOccupiedPixel: return 1.0f;
    case kFreePixel: return 0.0f;
    case kUnknownPixel: return kPriorProbability;
    default:
      throw std::runtime_error("PGM pixel value is not one of {0, 128, 255}");
  }
}

nlohmann::json pose_to_json(const Pose2D& p) {
  return {{"x", p.x}, {"y", p.y}, {"theta", p.theta}};
}

Pose2D pose_from_json(const nlohmann::json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("theta").get<double>()};
}

// Skips PGM whitespace and '#' comment lines before a header token.
void skip_pgm_separators(std::istream& in) {
  int c = in.peek();
  while (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#') {
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      in.get();
    }
    c = in.peek();
  }
}

}  // namespace

std::string encode_pgm(const OccupancyGrid& grid) {
  std::ostringstream out;
  out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
  for (int cy = 0; cy < grid.height(); ++cy)
    for (int cx = 0; cx < grid.width(); ++cx)
      out.put(static_cast<char>(pixel_from_label(grid.label(cx, cy))));
  return out.str();
}

std::filesystem::path sidecar_path(const std::filesystem::path& pgm_path) {
  std::filesystem::path p = pgm_path;
  p.replace_extension(".json");
  return p;
}

void save_grid_pgm(const OccupancyGrid& grid, const std::filesystem::path& pgm_path) {
  {
    std::ofstream out(pgm_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + pgm_path.string());
    const std::string bytes = encode_pgm(grid);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  nlohmann::json sidecar = {{"resolution", grid.resolution()},
                            {"origin", pose_to_json(grid.origin())}};
  std::ofstream js(sidecar_path(pgm_path));
  if (!js) throw std::runtime_error("cannot write " + sidecar_path(pgm_path).string());
  js << sidecar.dump() << "\n";
}

OccupancyGrid load_grid_pgm(const std::filesystem::path& pgm_path) {
  std::ifstream in(pgm_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + pgm_path.string());

  std::string magic;
  in >> magic;
  if (magic != "P5") throw std::runtime_error(pgm_path.string() + ": not a binary PGM (P5)");
  skip_pgm_separators(in);
  int width = 0, height = 0, maxval = 0;
  in >> width;
  skip_pgm_separators(in);
  in >> height;
  skip_pgm_separators(in);
  in >> maxval;
  if (!in || width <= 0 || height <= 0)
    throw std::runtime_error(pgm_path.string() + ": malformed PGM header");
  if (maxval != 255) throw std::runtime_error(pgm_path.string() + ": maxval must be 255");
  in.get();  // single separator byte before raster

  double resolution = 0.05;
  Pose2D origin;
  const auto side = sidecar_path(pgm_path);
  if (std::filesystem::exists(side)) {
    std::ifstream js(side);
    nlohmann::json j;
    js >> j;
    resolution = j.at("resolution").get<double>();
    origin = pose_from_json(j.at("origin"));
  }

  OccupancyGrid grid(width, height, resolution, origin);
  std::vector<char> row(static_cast<size_t>(width));
  for (int cy = 0; cy < height; ++cy) {
    in.read(row.data(), width);
    if (in.gcount() != width)
      throw std::runtime_error(pgm_path.string() + ": truncated raster");
    for (int cx = 0; cx < width; ++cx)
      grid.set(cx, cy, probability_from_pixel(static_cast<unsigned char>(row[cx])));
  }
  return grid;
}

}  // namespace frontiers
