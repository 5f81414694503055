#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frontiers/clustering.hpp"
#include "frontiers/oracles.hpp"
#include "frontiers/sim/worlds.hpp"
#include "frontiers/wfd.hpp"
#include "test_support.hpp"

using namespace frontiers;
using test_support::grid_from_ascii;

TEST_CASE("mean_shift basics") {
  SUBCASE("empty input, empty output") { CHECK(mean_shift({}, 1.0).empty()); }
  SUBCASE("bandwidth must be positive") {
    CHECK_THROWS_AS(mean_shift({{0, 0}}, 0.0), std::invalid_argument);
  }
  SUBCASE("single point forms its own cluster") {
    const auto clusters = mean_shift({{1.0, 2.0}}, 1.0);
    REQUIRE(clusters.size() == 1);
    REQUIRE(clusters[0].members.size() == 1);
    CHECK(clusters[0].centroid.x() == doctest::Approx(1.0));
    CHECK(clusters[0].centroid.y() == doctest::Approx(2.0));
  }
  SUBCASE("two points far beyond the bandwidth stay apart") {
    const auto clusters = mean_shift({{0, 0}, {10, 0}}, 1.0);
    CHECK(clusters.size() == 2);
  }
}

TEST_CASE("mean_shift separates two tight blobs 3 m apart") {
  std::mt19937 gen(2);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<Eigen::Vector2d> points;
  for (int i = 0; i < 10; ++i) points.push_back({noise(gen), noise(gen)});
  for (int i = 0; i < 10; ++i) points.push_back({3.0 + noise(gen), noise(gen)});

  const auto clusters = mean_shift(points, 0.5);
  REQUIRE(clusters.size() == 2);

  // Brute-force membership: every point belongs with the blob it came from.
  for (const FrontierCluster& cluster : clusters) {
    const bool right_blob = cluster.centroid.x() > 1.5;
    CHECK(cluster.members.size() == 10);
    for (const auto& m : cluster.members) CHECK((m.x() > 1.5) == right_blob);
  }
}

TEST_CASE("refine_by_connectivity") {
  SUBCASE("one open region stays one component") {
    const auto fused = grid_from_ascii({
        "....",
        "....",
    });
    FrontierCluster cluster;
    cluster.members = {fused.cell_center_world({0, 0}), fused.cell_center_world({3, 1})};
    const auto components = refine_by_connectivity(cluster, fused);
    CHECK(components.size() == 1);
    CHECK(components[0].size() == 2);
  }
  SUBCASE("a one-cell wall splits the cluster") {
    std::vector<std::string> rows(30, std::string(30, '.'));
    for (auto& r : rows) r[15] = '#';
    const auto fused = grid_from_ascii(rows);
    FrontierCluster cluster;
    cluster.members = {fused.cell_center_world({14, 10}), fused.cell_center_world({14, 20}),
                       fused.cell_center_world({16, 10}), fused.cell_center_world({16, 20})};
    const auto components = refine_by_connectivity(cluster, fused);
    REQUIRE(components.size() == 2);
    // Partition property: re-merged components equal the input membership.
    CHECK(components[0].size() + components[1].size() == cluster.members.size());
    for (const auto& comp : components) {
      const bool left = comp.front().x() < 15 * 0.05;
      for (const auto& m : comp) CHECK((m.x() < 15 * 0.05) == left);
    }
  }
  SUBCASE("unknown cells connect") {
    const auto fused = grid_from_ascii({
        "..??..",
    });
    FrontierCluster cluster;
    cluster.members = {fused.cell_center_world({0, 0}), fused.cell_center_world({5, 0})};
    CHECK(refine_by_connectivity(cluster, fused).size() == 1);
  }
  SUBCASE("member off the grid throws") {
    const auto fused = grid_from_ascii({".."});
    FrontierCluster cluster;
    cluster.members = {{5.0, 5.0}};
    CHECK_THROWS_AS(refine_by_connectivity(cluster, fused), std::invalid_argument);
  }
}

TEST_CASE("select_navigation_point picks the closest member") {
  const auto fused = grid_from_ascii({"...."});
  SUBCASE("single member") {
    const auto nav = select_navigation_point({{1.0, 1.0}}, {0, 0, 0}, fused);
    CHECK(nav.point.x() == 1.0);
    CHECK(nav.component_size == 1);
  }
  SUBCASE("argmin of distances 2.0 / 3.5 / 1.2") {
    const std::vector<Eigen::Vector2d> comp{{2.0, 0.0}, {0.0, 3.5}, {1.2, 0.0}};
    const auto nav = select_navigation_point(comp, {0, 0, 0}, fused);
    CHECK(nav.point.x() == doctest::Approx(1.2));
    CHECK(nav.point.y() == doctest::Approx(0.0));
  }
  SUBCASE("equidistant tie breaks to the lexicographically smaller point") {
    const std::vector<Eigen::Vector2d> comp{{1.0, -1.0}, {-1.0, 1.0}};
    const auto nav = select_navigation_point(comp, {0, 0, 0}, fused);
    CHECK(nav.point.x() == -1.0);
    CHECK(nav.point.y() == 1.0);
  }
  SUBCASE("empty component throws") {
    CHECK_THROWS_AS(select_navigation_point({}, {0, 0, 0}, fused), std::invalid_argument);
  }
}

TEST_CASE("prioritize orders by lambda*u - d") {
  // 21x21 map, all free except an unknown block on the right side.
  std::vector<std::string> rows(21, std::string(21, '.'));
  for (int cy = 0; cy < 21; ++cy)
    for (int cx = 14; cx < 21; ++cx) rows[static_cast<size_t>(cy)][static_cast<size_t>(cx)] = '?';
  const auto fused = grid_from_ascii(rows);

  SUBCASE("single point returns itself") {
    std::vector<NavigationPoint> navs(1);
    navs[0].point = {0.3, 0.3};
    const auto ordered = prioritize(navs, {0, 0, 0}, fused, 0.1);
    REQUIRE(ordered.size() == 1);
  }
  SUBCASE("equal unknown share, nearer point first") {
    std::vector<NavigationPoint> navs(2);
    navs[0].point = {0.25, 0.95};  // 1 m out, deep in free space
    navs[1].point = {0.25, 0.30};  // closer, same (zero) unknown share
    const auto ordered = prioritize(navs, {0.25, 0.0, 0}, fused, 0.1);
    CHECK(ordered[0].point.y() == doctest::Approx(0.30));
    CHECK(ordered[0].score > ordered[1].score);
  }
  SUBCASE("the worked score example: far-but-informative wins") {
    // Synthetic check of the formula itself.
    const double score_far = 10.0 * 0.8 - 6.0;
    const double score_near = 10.0 * 0.1 - 1.0;
    CHECK(score_far == doctest::Approx(2.0));
    CHECK(score_near == doctest::Approx(0.0));
    CHECK(score_far > score_near);
  }
  SUBCASE("output is a permutation of the input") {
    std::mt19937 gen(4);
    std::uniform_real_distribution<double> coord(0.05, 1.0);
    std::vector<NavigationPoint> navs(17);
    for (auto& n : navs) n.point = {coord(gen), coord(gen)};
    const auto ordered = prioritize(navs, {0.5, 0.5, 0}, fused, 0.2);
    REQUIRE(ordered.size() == navs.size());
    std::multiset<std::pair<double, double>> in, out;
    for (const auto& n : navs) in.insert({n.point.x(), n.point.y()});
    for (const auto& n : ordered) out.insert({n.point.x(), n.point.y()});
    CHECK(in == out);
    for (size_t i = 1; i < ordered.size(); ++i) CHECK(ordered[i - 1].score >= ordered[i].score);
  }
}

TEST_CASE("prioritize scores a point against its unknown window") {
  // Point at the unknown boundary: right half of its window is unknown.
  std::vector<std::string> rows(41, std::string(20, '.') + std::string(21, '?'));
  const auto fused = grid_from_ascii(rows);
  std::vector<NavigationPoint> navs(1);
  navs[0].point = fused.cell_center_world({19, 20});
  const auto ordered = prioritize(navs, {0.975, 1.025, 0}, fused, 0.5, 10.0);
  // Window half-width 0.5 m = 10 cells: 21x21 window, columns 20..29 unknown
  // (10 of 21 columns), robot sits on the point so d ~ 0.
  const double u = ordered[0].score / 10.0;  // d ~ 0 -> score ~ lambda*u
  CHECK(u == doctest::Approx(10.0 * 21.0 / (21.0 * 21.0)).epsilon(0.02));
}

TEST_CASE("wall-straddling cluster: centroid occupied, refined points free and reachable") {
  const OccupancyGrid fused = sim::wall_split_frontier_map();
  const Pose2D robot{0.35, 1.0, 0.0};  // left side, free space

  // Dense frontier: free cells adjacent to unknown, brute force.
  std::vector<Eigen::Vector2d> dense;
  for (int cy = 0; cy < fused.height(); ++cy)
    for (int cx = 0; cx < fused.width(); ++cx)
      if (is_frontier_cell(fused, {cx, cy}, Connectivity::Eight))
        dense.push_back(fused.cell_center_world({cx, cy}));
  REQUIRE(!dense.empty());

  // Unrefined mean-shift: at 1 m bandwidth the whole row collapses into one
  // cluster whose centroid sits on the wall column.
  const auto clusters = mean_shift(dense, 1.0);
  int occupied_centroids = 0;
  for (const FrontierCluster& c : clusters) {
    const auto cell = fused.world_to_cell(c.centroid);
    if (cell && fused.label(*cell) == CellLabel::Occupied) ++occupied_centroids;
  }
  CHECK(occupied_centroids >= 1);

  // The refined pipeline returns only free, robot-connected frontier cells.
  const auto navs = make_navigation_points(dense, fused, robot, {1.0, 10.0, 2.0});
  REQUIRE(!navs.empty());
  const auto robot_cell = fused.world_to_cell(robot.translation());
  REQUIRE(robot_cell);
  for (const NavigationPoint& nav : navs) {
    const auto cell = fused.world_to_cell(nav.point);
    REQUIRE(cell);
    CHECK(fused.label(*cell) == CellLabel::Free);
    CHECK(is_frontier_cell(fused, *cell, Connectivity::Eight));
    CHECK(oracles::path_exists(fused, *robot_cell, *cell, /*free_only=*/false));
  }

  // The wall keeps the right side unreachable from the robot, so every
  // emitted navigation point stays on the robot's side.
  for (const NavigationPoint& nav : navs) CHECK(nav.point.x() < 15 * 0.05);
}
