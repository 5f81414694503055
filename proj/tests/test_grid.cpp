#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "frontiers/grid.hpp"
#include "frontiers/grid_io.hpp"
#include "frontiers/oracles.hpp"
#include "test_support.hpp"

using namespace frontiers;
using test_support::grid_from_ascii;
using test_support::random_grid;

TEST_CASE("label_cell implements the three-way labeling") {
  CHECK(label_cell(0.3f) == CellLabel::Free);
  CHECK(label_cell(0.5f) == CellLabel::Unknown);
  CHECK(label_cell(0.7f) == CellLabel::Occupied);
  CHECK(label_cell(0.0f) == CellLabel::Free);
  CHECK(label_cell(1.0f) == CellLabel::Occupied);
  CHECK_THROWS_AS(label_cell(-0.01f), std::invalid_argument);
  CHECK_THROWS_AS(label_cell(1.01f), std::invalid_argument);
  CHECK_THROWS_AS(label_cell(std::numeric_limits<float>::quiet_NaN()), std::invalid_argument);
}

TEST_CASE("label_cell partitions [0, 1]") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  for (int i = 0; i < 5000; ++i) {
    const float p = dist(gen);
    const CellLabel l = label_cell(p);
    if (p < 0.5f) CHECK(l == CellLabel::Free);
    if (p > 0.5f) CHECK(l == CellLabel::Occupied);
    if (p == 0.5f) CHECK(l == CellLabel::Unknown);
  }
}

TEST_CASE("unobserved cells hold exactly the prior") {
  const OccupancyGrid grid(4, 3);
  for (int cy = 0; cy < 3; ++cy)
    for (int cx = 0; cx < 4; ++cx) CHECK(grid.at(cx, cy) == kPriorProbability);
}

TEST_CASE("inflate leaves a grid without occupied cells unchanged") {
  OccupancyGrid grid(9, 9);
  grid.set(4, 4, 0.1f);
  const OccupancyGrid out = inflate(grid, 8);
  CHECK(out == grid);
}

TEST_CASE("inflate grows a single occupied cell into the 13-cell disc") {
  OccupancyGrid grid(9, 9);
  for (int cy = 0; cy < 9; ++cy)
    for (int cx = 0; cx < 9; ++cx) grid.set(cx, cy, 0.1f);
  grid.set(4, 4, 0.9f);
  const OccupancyGrid out = inflate(grid, 2);

  int occupied = 0;
  for (int cy = 0; cy < 9; ++cy) {
    for (int cx = 0; cx < 9; ++cx) {
      const bool in_disc = (cx - 4) * (cx - 4) + (cy - 4) * (cy - 4) <= 4;
      CHECK((out.label(cx, cy) == CellLabel::Occupied) == in_disc);
      if (in_disc) ++occupied;
    }
  }
  CHECK(occupied == 13);
}

TEST_CASE("inflate saturates an all-occupied grid") {
  OccupancyGrid grid(5, 5);
  for (int cy = 0; cy < 5; ++cy)
    for (int cx = 0; cx < 5; ++cx) grid.set(cx, cy, 0.9f);
  const OccupancyGrid out = inflate(grid, 3);
  for (int cy = 0; cy < 5; ++cy)
    for (int cx = 0; cx < 5; ++cx) CHECK(out.label(cx, cy) == CellLabel::Occupied);
}

TEST_CASE("inflate turns unknown cells inside a disc occupied") {
  auto grid = grid_from_ascii({"?.#", "...", "..."});
  const OccupancyGrid out = inflate(grid, 2);
  CHECK(out.label(0, 0) == CellLabel::Occupied);
}

TEST_CASE("inflate rejects negative radius") {
  CHECK_THROWS_AS(inflate(OccupancyGrid(3, 3), -1), std::invalid_argument);
}

TEST_CASE("inflate matches the distance-check oracle and is monotone/idempotent") {
  std::mt19937 gen(42);
  for (int trial = 0; trial < 20; ++trial) {
    const OccupancyGrid grid = random_grid(gen, 24, 18);
    const int radius = trial % 4;
    const OccupancyGrid fast = inflate(grid, radius);
    const auto expected = oracles::inflate_labels(grid, radius);
    bool occupied_only_grew = true;
    for (int cy = 0; cy < 18; ++cy) {
      for (int cx = 0; cx < 24; ++cx) {
        CHECK(fast.label(cx, cy) == expected[static_cast<size_t>(cy) * 24 + cx]);
        if (grid.label(cx, cy) == CellLabel::Occupied &&
            fast.label(cx, cy) != CellLabel::Occupied)
          occupied_only_grew = false;
      }
    }
    CHECK(occupied_only_grew);
    CHECK(inflate(fast, 0) == fast);  // re-dilating with radius 0 is a no-op
  }
}

TEST_CASE("world_to_cell worked examples") {
  const OccupancyGrid grid(100, 100, 0.05);
  const auto origin_cell = grid.world_to_cell({0.0, 0.0});
  REQUIRE(origin_cell);
  CHECK(origin_cell->x() == 0);
  CHECK(origin_cell->y() == 0);

  const auto c = grid.world_to_cell({0.26, 0.11});
  REQUIRE(c);
  CHECK(c->x() == 5);
  CHECK(c->y() == 2);

  CHECK_FALSE(grid.world_to_cell({-0.05, 0.0}));
}

TEST_CASE("world_to_cell inverts cell centers on random posed grids") {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int trial = 0; trial < 20; ++trial) {
    const Pose2D origin(coord(gen), coord(gen), angle(gen));
    const OccupancyGrid grid(17, 11, 0.05, origin);
    for (int cy = 0; cy < grid.height(); ++cy) {
      for (int cx = 0; cx < grid.width(); ++cx) {
        const auto back = grid.world_to_cell(grid.cell_center_world({cx, cy}));
        REQUIRE(back);
        CHECK(back->x() == cx);
        CHECK(back->y() == cy);
      }
    }
  }
}

TEST_CASE("PGM round-trips bit-exactly with its sidecar") {
  const auto dir = std::filesystem::temp_directory_path() / "frontiers_grid_io_test";
  std::filesystem::create_directories(dir);
  std::mt19937 gen(17);
  OccupancyGrid grid = random_grid(gen, 33, 21);
  grid.set_origin({1.5, -2.0, 0.3});

  const auto path = dir / "grid.pgm";
  save_grid_pgm(grid, path);
  const OccupancyGrid loaded = load_grid_pgm(path);

  CHECK(loaded.width() == grid.width());
  CHECK(loaded.height() == grid.height());
  CHECK(loaded.resolution() == grid.resolution());
  CHECK(loaded.origin() == grid.origin());
  for (int cy = 0; cy < grid.height(); ++cy)
    for (int cx = 0; cx < grid.width(); ++cx)
      CHECK(loaded.label(cx, cy) == grid.label(cx, cy));

  // File-level round trip: saving the loaded grid reproduces the bytes.
  const auto path2 = dir / "grid2.pgm";
  save_grid_pgm(loaded, path2);
  std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
  const std::string bytes_a((std::istreambuf_iterator<char>(a)), {});
  const std::string bytes_b((std::istreambuf_iterator<char>(b)), {});
  CHECK(bytes_a == bytes_b);
}

TEST_CASE("PGM loader rejects bad files") {
  const auto dir = std::filesystem::temp_directory_path() / "frontiers_grid_io_test";
  std::filesystem::create_directories(dir);

  SUBCASE("wrong magic") {
    std::ofstream(dir / "bad1.pgm") << "P2\n2 2\n255\n0 0 0 0\n";
    CHECK_THROWS(load_grid_pgm(dir / "bad1.pgm"));
  }
  SUBCASE("wrong maxval") {
    std::ofstream(dir / "bad2.pgm") << "P5\n1 1\n15\n" << char(0);
    CHECK_THROWS(load_grid_pgm(dir / "bad2.pgm"));
  }
  SUBCASE("pixel outside the three label values") {
    std::ofstream(dir / "bad3.pgm", std::ios::binary) << "P5\n1 1\n255\n" << char(37);
    try {
      load_grid_pgm(dir / "bad3.pgm");
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("not one of") != std::string::npos);
    }
  }
  SUBCASE("truncated raster") {
    std::ofstream(dir / "bad4.pgm", std::ios::binary) << "P5\n2 2\n255\n" << char(0);
    CHECK_THROWS(load_grid_pgm(dir / "bad4.pgm"));
  }
}
