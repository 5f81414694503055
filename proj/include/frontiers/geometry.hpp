#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>

namespace frontiers {

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double angle) {
  double a = std::remainder(angle, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

/// SE(2) pose (x, y, theta). theta is kept in (-pi, pi] by every
/// constructor and by composition/inverse.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Pose2D() = default;
  Pose2D(double x_, double y_, double theta_)
      : x(x_), y(y_), theta(normalize_angle(theta_)) {}

  static Pose2D identity() { return {}; }

  Eigen::Vector2d translation() const { return {x, y}; }
  Eigen::Rotation2Dd rotation() const { return Eigen::Rotation2Dd(theta); }

  /// Applies the pose to a point: rotate by theta, then translate.
  Eigen::Vector2d operator*(const Eigen::Vector2d& p) const {
    return rotation() * p + translation();
  }

  /// Frame composition: (a * b) * p == a * (b * p).
  Pose2D operator*(const Pose2D& other) const {
    const Eigen::Vector2d t = rotation() * other.translation() + translation();
    return {t.x(), t.y(), theta + other.theta};
  }

  Pose2D inverse() const {
    const Eigen::Vector2d t = Eigen::Rotation2Dd(-theta) * Eigen::Vector2d(-x, -y);
    return {t.x(), t.y(), -theta};
  }

  bool operator==(const Pose2D&) const = default;
};

inline Eigen::Vector2d transform_point(const Pose2D& pose, const Eigen::Vector2d& local) {
  return pose * local;
}

/// Accumulated pose change (Direct method bookkeeping). Unlike Pose2D the
/// angular component is a raw signed sum, deliberately not normalized, so
/// opposite per-round drifts cancel instead of wrapping.
struct PoseDelta {
  double dx = 0.0;
  double dy = 0.0;
  double dtheta = 0.0;

  bool operator==(const PoseDelta&) const = default;
};

/// Componentwise cd + (cp - pp); the per-round angular difference is
/// normalized before it enters the sum.
inline PoseDelta accumulate_deviation(const PoseDelta& cd, const Pose2D& cp, const Pose2D& pp) {
  return {cd.dx + (cp.x - pp.x),
          cd.dy + (cp.y - pp.y),
          cd.dtheta + normalize_angle(cp.theta - pp.theta)};
}

}  // namespace frontiers
