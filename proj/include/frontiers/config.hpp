#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "frontiers/clustering.hpp"
#include "frontiers/incremental.hpp"

namespace frontiers {

/// Every tunable of the simulator, detector and strategies, with the paper
/// defaults baked in. Loadable from a TOML-style `key = value` file; every
/// key is optional, unknown keys are an error naming the key.
struct ExploreConfig {
  // grid / detection
  double resolution = 0.05;          // meters per cell
  int inflation_radius = 8;          // cells (robot radius 0.20 m + 0.20 m margin)
  int connectivity = 8;              // WFD adjacency, 8 or 4

  // sensor
  double lidar_range = 8.0;          // meters
  double lidar_fov = M_PI;           // radians
  int lidar_beams = 180;

  // submaps & strategies
  int submap_scans = 70;
  std::string strategy = "direct";   // dfd | bfs | direct
  double epsilon = 0.05;             // deviation threshold, meters
  double angular_divisor = 2.0 * M_PI;

  // clustering
  double meanshift_bandwidth = 1.0;  // meters
  double score_lambda = 10.0;
  double score_window = 2.0;         // meters, half-width of the unknown-ratio window

  // drift & optimization emulation
  double drift_xy_sigma = 0.01;      // meters of noise per sqrt(meter traveled)
  double drift_theta_sigma = 0.01;   // radians of noise per sqrt(radian turned)
  double optimization_strength = 0.5;
  double optimization_jitter_xy = 0.0005;     // meters, must stay <= 1 mm
  double optimization_jitter_theta = 0.0001;  // radians
  double loop_closure_travel = 30.0;          // meters before a revisit counts as a loop
  std::uint32_t seed = 1;

  // exploration loop
  double goal_tolerance = 0.1;       // meters
  int max_stall_rounds = 10;

  void validate() const;

  DeviationConfig deviation_config() const {
    return {epsilon, lidar_range, angular_divisor};
  }
  ClusterParams cluster_params() const {
    return {meanshift_bandwidth, score_lambda, score_window};
  }
};

ExploreConfig load_config(const std::filesystem::path& path);
void save_config(const ExploreConfig& config, const std::filesystem::path& path);

}  // namespace frontiers
