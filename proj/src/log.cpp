#include "frontiers/log.hpp"

#include <fstream>

#include <json.hpp>

namespace frontiers {

namespace {

using nlohmann::json;
using sim::ExplorationLog;
using sim::RoundRecord;

json pose_to_json(const Pose2D& p) { return {{"x", p.x}, {"y", p.y}, {"theta", p.theta}}; }

Pose2D pose_from_json(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("theta").get<double>()};
}

json points_to_json(const std::vector<Eigen::Vector2d>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back({p.x(), p.y()});
  return arr;
}

std::vector<Eigen::Vector2d> points_from_json(const json& arr) {
  std::vector<Eigen::Vector2d> points;
  points.reserve(arr.size());
  for (const json& p : arr) points.emplace_back(p[0].get<double>(), p[1].get<double>());
  return points;
}

json frontiers_to_json(const GlobalFrontierSet& frontiers) {
  json obj = json::object();
  for (const auto& [id, cells] : frontiers) {
    json arr = json::array();
    for (const Cell& c : cells) arr.push_back({c.x(), c.y()});
    obj[std::to_string(id)] = std::move(arr);
  }
  return obj;
}

GlobalFrontierSet frontiers_from_json(const json& obj) {
  GlobalFrontierSet frontiers;
  for (const auto& [key, arr] : obj.items()) {
    std::vector<Cell>& cells = frontiers[std::stoi(key)];
    cells.reserve(arr.size());
    for (const json& c : arr) cells.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return frontiers;
}

json config_to_json(const ExploreConfig& c) {
  return {{"resolution", c.resolution},
          {"inflation_radius", c.inflation_radius},
          {"connectivity", c.connectivity},
          {"lidar_range", c.lidar_range},
          {"lidar_fov", c.lidar_fov},
          {"lidar_beams", c.lidar_beams},
          {"submap_scans", c.submap_scans},
          {"strategy", c.strategy},
          {"epsilon", c.epsilon},
          {"angular_divisor", c.angular_divisor},
          {"meanshift_bandwidth", c.meanshift_bandwidth},
          {"score_lambda", c.score_lambda},
          {"score_window", c.score_window},
          {"drift_xy_sigma", c.drift_xy_sigma},
          {"drift_theta_sigma", c.drift_theta_sigma},
          {"optimization_strength", c.optimization_strength},
          {"optimization_jitter_xy", c.optimization_jitter_xy},
          {"optimization_jitter_theta", c.optimization_jitter_theta},
          {"loop_closure_travel", c.loop_closure_travel},
          {"seed", c.seed},
          {"goal_tolerance", c.goal_tolerance},
          {"max_stall_rounds", c.max_stall_rounds}};
}

ExploreConfig config_from_json(const json& j) {
  ExploreConfig c;
  c.resolution = j.at("resolution").get<double>();
  c.inflation_radius = j.at("inflation_radius").get<int>();
  c.connectivity = j.at("connectivity").get<int>();
  c.lidar_range = j.at("lidar_range").get<double>();
  c.lidar_fov = j.at("lidar_fov").get<double>();
  c.lidar_beams = j.at("lidar_beams").get<int>();
  c.submap_scans = j.at("submap_scans").get<int>();
  c.strategy = j.at("strategy").get<std::string>();
  c.epsilon = j.at("epsilon").get<double>();
  c.angular_divisor = j.at("angular_divisor").get<double>();
  c.meanshift_bandwidth = j.at("meanshift_bandwidth").get<double>();
  c.score_lambda = j.at("score_lambda").get<double>();
  c.score_window = j.at("score_window").get<double>();
  c.drift_xy_sigma = j.at("drift_xy_sigma").get<double>();
  c.drift_theta_sigma = j.at("drift_theta_sigma").get<double>();
  c.optimization_strength = j.at("optimization_strength").get<double>();
  c.optimization_jitter_xy = j.at("optimization_jitter_xy").get<double>();
  c.optimization_jitter_theta = j.at("optimization_jitter_theta").get<double>();
  c.loop_closure_travel = j.at("loop_closure_travel").get<double>();
  c.seed = j.at("seed").get<std::uint32_t>();
  c.goal_tolerance = j.at("goal_tolerance").get<double>();
  c.max_stall_rounds = j.at("max_stall_rounds").get<int>();
  return c;
}

json round_to_json(const RoundRecord& r) {
  json corrected = json::object();
  for (const auto& [id, pose] : r.event.corrected_poses)
    corrected[std::to_string(id)] = pose_to_json(pose);

  json nav = json::array();
  for (const auto& n : r.nav_points)
    nav.push_back({{"x", n.point.x()},
                   {"y", n.point.y()},
                   {"score", n.score},
                   {"component_size", n.component_size}});

  json queried = json::array();
  for (int id : r.report.queried_submaps) queried.push_back(id);

  return {{"type", "round"},
          {"round", r.round},
          {"new_submap", r.new_submap},
          {"initial_cp", pose_to_json(r.submap_initial_cp)},
          {"event",
           {{"latest", r.event.latest_submap},
            {"loop_closure", r.event.loop_closure},
            {"corrected", std::move(corrected)}}},
          {"report",
           {{"strategy", strategy_name(r.report.strategy)},
            {"queried_submaps", std::move(queried)},
            {"queried_points", r.report.queried_points},
            {"frontier_count", r.report.frontier_count},
            {"frontiers", frontiers_to_json(r.report.frontiers)}}},
          {"robot_true", pose_to_json(r.robot_true)},
          {"robot_est", pose_to_json(r.robot_est)},
          {"nav_points", std::move(nav)},
          {"planned_path", points_to_json(r.planned_path)},
          {"observed_cells", r.observed_cells},
          {"ticks", points_to_json(r.ticks)}};
}

RoundRecord round_from_json(const json& j) {
  RoundRecord r;
  r.round = j.at("round").get<int>();
  r.new_submap = j.at("new_submap").get<int>();
  r.submap_initial_cp = pose_from_json(j.at("initial_cp"));
  r.event.round = r.round;
  r.event.latest_submap = j.at("event").at("latest").get<int>();
  r.event.loop_closure = j.at("event").at("loop_closure").get<bool>();
  for (const auto& [key, pose] : j.at("event").at("corrected").items())
    r.event.corrected_poses[std::stoi(key)] = pose_from_json(pose);
  const json& report = j.at("report");
  r.report.strategy = strategy_from_name(report.at("strategy").get<std::string>());
  r.report.round = r.round;
  for (const json& id : report.at("queried_submaps"))
    r.report.queried_submaps.insert(id.get<int>());
  r.report.queried_points = report.at("queried_points").get<std::int64_t>();
  r.report.frontier_count = report.at("frontier_count").get<std::size_t>();
  r.report.frontiers = frontiers_from_json(report.at("frontiers"));
  r.robot_true = pose_from_json(j.at("robot_true"));
  r.robot_est = pose_from_json(j.at("robot_est"));
  for (const json& n : j.at("nav_points")) {
    NavigationPoint nav;
    nav.point = {n.at("x").get<double>(), n.at("y").get<double>()};
    nav.score = n.at("score").get<double>();
    nav.component_size = n.at("component_size").get<int>();
    r.nav_points.push_back(nav);
  }
  r.planned_path = points_from_json(j.at("planned_path"));
  r.observed_cells = j.at("observed_cells").get<std::int64_t>();
  r.ticks = points_from_json(j.at("ticks"));
  return r;
}

}  // namespace

void write_log(const ExplorationLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write log " + path.string());
  json header = {{"type", "header"}, {"config", config_to_json(log.config)}};
  out << header.dump() << "\n";
  for (const RoundRecord& r : log.rounds) out << round_to_json(r).dump() << "\n";
}

ExplorationLog read_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read log " + path.string());
  ExplorationLog log;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(path.string() + ": corrupt log line: " + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      log.config = config_from_json(j.at("config"));
      have_header = true;
    } else if (type == "round") {
      log.rounds.push_back(round_from_json(j));
    } else {
      throw std::runtime_error(path.string() + ": unknown log record type '" + type + "'");
    }
  }
  if (!have_header) throw std::runtime_error(path.string() + ": log header missing");
  return log;
}

}  // namespace frontiers
