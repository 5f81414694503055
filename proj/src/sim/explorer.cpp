#include "frontiers/sim/explorer.hpp"

#include <queue>

#include "frontiers/sim/planner.hpp"
#include "frontiers/sim/submap_builder.hpp"

namespace frontiers::sim {

OptimizationEvent optimization_step(SubmapGraph& graph,
                                    const std::map<int, Pose2D>& truth_poses,
                                    double strength, double jitter_xy, double jitter_theta,
                                    Rng& rng, int round, int latest_submap,
                                    bool loop_closure) {
  if (strength < 0.0 || strength > 1.0)
    throw std::invalid_argument("optimization_step: strength must be in [0, 1]");

  OptimizationEvent event;
  event.round = round;
  event.latest_submap = latest_submap;
  event.loop_closure = loop_closure;
  for (int id = 0; id < graph.count(); ++id) {
    const Submap& s = graph.submap(id);
    if (!s.finished) continue;
    const Pose2D truth = truth_poses.at(id);
    const Pose2D& cp = s.current_pose;
    const double jx = jitter_xy > 0.0 ? rng.uniform(-jitter_xy, jitter_xy) : 0.0;
    const double jy = jitter_xy > 0.0 ? rng.uniform(-jitter_xy, jitter_xy) : 0.0;
    const double jt = jitter_theta > 0.0 ? rng.uniform(-jitter_theta, jitter_theta) : 0.0;
    event.corrected_poses[id] =
        Pose2D(cp.x + strength * (truth.x - cp.x) + jx,
               cp.y + strength * (truth.y - cp.y) + jy,
               cp.theta + strength * normalize_angle(truth.theta - cp.theta) + jt);
  }
  apply_optimization(graph, event);
  return event;
}

namespace {

/// Reachable Free cells of the truth raster, flooded from the start cell.
std::vector<char> reachable_free_mask(const World& world) {
  const OccupancyGrid& truth = world.truth;
  std::vector<char> mask(static_cast<size_t>(truth.width()) * truth.height(), 0);
  const auto start = truth.world_to_cell(world.start.translation());
  if (!start) return mask;
  auto idx = [&](const Cell& c) { return static_cast<size_t>(c.y()) * truth.width() + c.x(); };
  std::queue<Cell> queue;
  queue.push(*start);
  mask[idx(*start)] = 1;
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const Cell n(c.x() + dx, c.y() + dy);
        if (!truth.contains(n) || mask[idx(n)]) continue;
        if (truth.label(n) != CellLabel::Free) continue;
        mask[idx(n)] = 1;
        queue.push(n);
      }
    }
  }
  return mask;
}

std::int64_t count_observed(const World& world, const std::vector<char>& reachable,
                            const OccupancyGrid& fused) {
  std::int64_t observed = 0;
  for (int cy = 0; cy < world.truth.height(); ++cy) {
    for (int cx = 0; cx < world.truth.width(); ++cx) {
      if (!reachable[static_cast<size_t>(cy) * world.truth.width() + cx]) continue;
      const auto cell = fused.world_to_cell(world.truth.cell_center_world(Cell(cx, cy)));
      if (cell && fused.label(*cell) != CellLabel::Unknown) ++observed;
    }
  }
  return observed;
}

struct PathFollower {
  std::vector<Eigen::Vector2d> waypoints;
  size_t next = 0;

  bool active() const { return next < waypoints.size(); }
  void clear() {
    waypoints.clear();
    next = 0;
  }
};

}  // namespace

ExplorationResult explore(const World& world, const ExploreConfig& config) {
  config.validate();
  world.validate(config.inflation_radius);

  const SensorModel sensor{config.lidar_range, config.lidar_fov, config.lidar_beams};
  sensor.validate();
  const DeviationConfig dev_cfg = config.deviation_config();
  const ClusterParams cluster_params = config.cluster_params();
  const Strategy strategy = strategy_from_name(config.strategy);
  const Connectivity conn =
      config.connectivity == 8 ? Connectivity::Eight : Connectivity::Four;
  const double step = config.resolution;

  const DriftModel drift{config.drift_xy_sigma, config.drift_theta_sigma, config.seed};
  Rng drift_rng(drift.rng_seed);
  Rng opt_rng(config.seed + 1);

  Pose2D true_pose = world.start;
  Pose2D est_pose = world.start;
  double travel = 0.0;
  double last_loop_travel = -1e18;

  SubmapGraph graph;
  std::map<int, Pose2D> truth_anchors;
  std::map<int, double> finish_travel;

  auto make_builder = [&](int id) {
    return SubmapBuilder(id, est_pose, true_pose, config.resolution, config.lidar_range,
                         config.submap_scans, step);
  };
  SubmapBuilder builder = make_builder(0);

  const std::vector<char> reachable = reachable_free_mask(world);

  ExplorationResult result;
  result.log.config = config;

  OccupancyGrid fused;
  OccupancyGrid fused_inflated;
  PathFollower path;
  std::vector<NavigationPoint> nav_points;
  size_t nav_index = 0;
  std::vector<Eigen::Vector2d> pending_ticks;
  StallGuard stall_guard(config.max_stall_rounds);
  int round = 0;
  bool done = false;

  // Plans to the next plannable navigation point, in priority order.
  auto plan_next_target = [&]() -> std::vector<Eigen::Vector2d> {
    path.clear();
    const auto start_cell = fused_inflated.world_to_cell(est_pose.translation());
    if (!start_cell) return {};
    Pose2D plan_start = est_pose;
    if (fused_inflated.label(*start_cell) != CellLabel::Free) {
      // Pose corrections can land the estimate just off observed free
      // space; recover through the nearest free cell.
      const auto recovery =
          find_free_seed(fused_inflated, *start_cell, config.inflation_radius);
      if (!recovery) return {};
      const Eigen::Vector2d c = fused_inflated.cell_center_world(*recovery);
      plan_start = Pose2D(c.x(), c.y(), est_pose.theta);
    }
    while (nav_index < nav_points.size()) {
      auto planned = plan_path(fused_inflated, plan_start, nav_points[nav_index].point);
      ++nav_index;
      if (planned) {
        path.waypoints = *planned;
        path.next = 0;
        return path.waypoints;
      }
    }
    return {};
  };

  while (!done) {
    const auto scan = raycast_scan(world, true_pose, sensor);
    builder.integrate_scan(est_pose, scan);

    if (builder.finished()) {
      const int id = builder.id();
      truth_anchors[id] = builder.anchor_truth();
      finish_travel[id] = travel;
      Submap submap = builder.finish(config.inflation_radius, conn);
      const Pose2D initial_cp = submap.current_pose;
      graph.add_submap(std::move(submap));

      // Loop closure: the robot re-entered a box mapped >= loop_closure_travel
      // meters ago (with the same span as a cooldown between closures).
      bool loop_closure = false;
      if (travel - last_loop_travel >= config.loop_closure_travel) {
        for (int other = 0; other < graph.count() - 1 && !loop_closure; ++other) {
          if (travel - finish_travel[other] < config.loop_closure_travel) continue;
          if (graph.box(other).contains(est_pose.translation())) loop_closure = true;
        }
      }
      if (loop_closure) last_loop_travel = travel;

      const Pose2D cp_before = graph.submap(id).current_pose;
      OptimizationEvent event = optimization_step(
          graph, truth_anchors, loop_closure ? 1.0 : config.optimization_strength,
          config.optimization_jitter_xy, config.optimization_jitter_theta, opt_rng, round,
          id, loop_closure);
      UpdateReport report = run_strategy(strategy, graph, event, dev_cfg);

      // Localization rejoins the optimized graph: apply the latest submap's
      // world-frame correction to the robot estimate.
      const Pose2D correction = graph.submap(id).current_pose * cp_before.inverse();
      est_pose = correction * est_pose;

      fused = graph.fuse_global_map();
      fused_inflated = inflate(fused, config.inflation_radius);

      const std::int64_t observed = count_observed(world, reachable, fused);
      stall_guard.update(observed, round);

      nav_points = make_navigation_points(graph.global_frontier_points(), fused, est_pose,
                                          cluster_params);
      nav_index = 0;

      RoundRecord record;
      record.round = round;
      record.new_submap = id;
      record.submap_initial_cp = initial_cp;
      record.event = std::move(event);
      record.report = std::move(report);
      record.robot_true = true_pose;
      record.robot_est = est_pose;
      record.nav_points = nav_points;
      record.observed_cells = observed;
      record.ticks = std::move(pending_ticks);
      pending_ticks.clear();

      if (nav_points.empty()) {
        done = true;  // nothing reachable is left to explore
      } else {
        record.planned_path = plan_next_target();
        if (!path.active()) done = true;  // frontiers remain but none is plannable
      }
      result.log.rounds.push_back(std::move(record));
      ++round;

      if (!done) builder = make_builder(id + 1);
      continue;
    }

    // Movement tick.
    if (path.active()) {
      while (path.active() &&
             (path.waypoints[path.next] - est_pose.translation()).norm() <
                 std::max(config.goal_tolerance, step))
        ++path.next;
      if (!path.active()) plan_next_target();  // reached the goal: next target in order
    }
    if (path.active()) {
      const Eigen::Vector2d to_wp = path.waypoints[path.next] - est_pose.translation();
      const double heading = std::atan2(to_wp.y(), to_wp.x());
      const double dtheta = normalize_angle(heading - est_pose.theta);

      const double new_true_theta = normalize_angle(true_pose.theta + dtheta);
      const Eigen::Vector2d true_delta =
          Eigen::Vector2d(std::cos(new_true_theta), std::sin(new_true_theta)) * step;
      const auto new_true_cell =
          world.truth.world_to_cell(true_pose.translation() + true_delta);
      if (new_true_cell && world.truth.label(*new_true_cell) == CellLabel::Free) {
        true_pose = Pose2D(true_pose.x + true_delta.x(), true_pose.y + true_delta.y(),
                           new_true_theta);
        const double nx = drift_rng.gaussian(0.0, drift.per_meter_xy_sigma * std::sqrt(step));
        const double ny = drift_rng.gaussian(0.0, drift.per_meter_xy_sigma * std::sqrt(step));
        const double nt = drift_rng.gaussian(
            0.0, drift.per_radian_theta_sigma * std::sqrt(std::abs(dtheta)));
        const double new_est_theta = normalize_angle(est_pose.theta + dtheta + nt);
        est_pose = Pose2D(
            est_pose.x + std::cos(new_est_theta) * step + nx,
            est_pose.y + std::sin(new_est_theta) * step + ny, new_est_theta);
        travel += step;
      } else {
        path.clear();  // true world blocks the step; replan after the next round
      }
    }
    pending_ticks.push_back(est_pose.translation());
  }

  result.graph = std::move(graph);
  result.fused = std::move(fused);
  return result;
}

}  // namespace frontiers::sim
