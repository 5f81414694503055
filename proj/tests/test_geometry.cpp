#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frontiers/geometry.hpp"

using namespace frontiers;

TEST_CASE("normalize_angle maps into (-pi, pi]") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(normalize_angle(-M_PI) == doctest::Approx(M_PI));
  CHECK(normalize_angle(3.0 * M_PI) == doctest::Approx(M_PI));
  CHECK(normalize_angle(2.0 * M_PI) == doctest::Approx(0.0));
  CHECK(normalize_angle(-0.5) == doctest::Approx(-0.5));

  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = normalize_angle(dist(gen));
    CHECK(a > -M_PI);
    CHECK(a <= M_PI);
  }
}

TEST_CASE("pose constructors normalize theta") {
  CHECK(Pose2D(0, 0, 3.0 * M_PI).theta == doctest::Approx(M_PI));
  CHECK(Pose2D(0, 0, -M_PI).theta == doctest::Approx(M_PI));
}

TEST_CASE("composition with identity is the operand") {
  const Pose2D p(1.25, -3.5, 0.7);
  const Pose2D id = Pose2D::identity();
  CHECK((id * p) == p);
  const Pose2D q = p * id;
  CHECK(q.x == doctest::Approx(p.x));
  CHECK(q.y == doctest::Approx(p.y));
  CHECK(q.theta == doctest::Approx(p.theta));
}

TEST_CASE("transform_point worked examples") {
  CHECK(transform_point({0, 0, 0}, {1.5, 2.0}).x() == doctest::Approx(1.5));
  CHECK(transform_point({0, 0, 0}, {1.5, 2.0}).y() == doctest::Approx(2.0));

  CHECK(transform_point({1, 0, 0}, {0.5, 0}).x() == doctest::Approx(1.5));
  CHECK(transform_point({1, 0, 0}, {0.5, 0}).y() == doctest::Approx(0.0));

  // Hand rotation-matrix evaluation at theta = pi/2: (1, 0) -> (0, 1).
  const Eigen::Vector2d r = transform_point({0, 0, M_PI / 2}, {1, 0});
  CHECK(std::abs(r.x()) < 1e-12);
  CHECK(std::abs(r.y() - 1.0) < 1e-12);
}

TEST_CASE("inverse recovers the input within 1e-9 over |coord| <= 1e3") {
  std::mt19937 gen(21);
  std::uniform_real_distribution<double> coord(-1e3, 1e3);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int i = 0; i < 500; ++i) {
    const Pose2D pose(coord(gen), coord(gen), angle(gen));
    const Eigen::Vector2d p(coord(gen), coord(gen));
    const Eigen::Vector2d back = pose.inverse() * (pose * p);
    CHECK(std::abs(back.x() - p.x()) < 1e-9);
    CHECK(std::abs(back.y() - p.y()) < 1e-9);
  }
}

TEST_CASE("pose composition associates with point transform") {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int i = 0; i < 200; ++i) {
    const Pose2D a(coord(gen), coord(gen), angle(gen));
    const Pose2D b(coord(gen), coord(gen), angle(gen));
    const Eigen::Vector2d p(coord(gen), coord(gen));
    const Eigen::Vector2d lhs = (a * b) * p;
    const Eigen::Vector2d rhs = a * (b * p);
    CHECK(std::abs(lhs.x() - rhs.x()) < 1e-9);
    CHECK(std::abs(lhs.y() - rhs.y()) < 1e-9);
  }
}

TEST_CASE("accumulate_deviation sums componentwise") {
  const PoseDelta zero;
  SUBCASE("no change stays zero") {
    const PoseDelta cd = accumulate_deviation(zero, {1, 2, 0.5}, {1, 2, 0.5});
    CHECK(cd == PoseDelta{});
  }
  SUBCASE("two +3 cm rounds sum to exactly 6 cm") {
    PoseDelta cd = accumulate_deviation(zero, {0.03, 0, 0}, {0, 0, 0});
    cd = accumulate_deviation(cd, {0.06, 0, 0}, {0.03, 0, 0});
    CHECK(cd.dx == 0.06);
  }
  SUBCASE("opposite drifts cancel exactly") {
    PoseDelta cd = accumulate_deviation(zero, {0.04, 0, 0}, {0, 0, 0});
    cd = accumulate_deviation(cd, {0.0, 0, 0}, {0.04, 0, 0});
    CHECK(cd.dx == 0.0);
    CHECK(cd.dy == 0.0);
    CHECK(cd.dtheta == 0.0);
  }
  SUBCASE("angular difference is normalized per round") {
    // 3.0 -> -3.0 crosses the wrap: a small positive step, not -6 rad.
    const PoseDelta cd = accumulate_deviation(zero, {0, 0, -3.0}, {0, 0, 3.0});
    CHECK(cd.dtheta == doctest::Approx(2.0 * M_PI - 6.0));
  }
}
