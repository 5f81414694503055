#include "frontiers/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace frontiers {

void ExploreConfig::validate() const {
  if (resolution <= 0.0) throw std::invalid_argument("config: resolution must be > 0");
  if (inflation_radius < 0) throw std::invalid_argument("config: inflation_radius must be >= 0");
  if (connectivity != 4 && connectivity != 8)
    throw std::invalid_argument("config: connectivity must be 4 or 8");
  if (lidar_range <= 0.0) throw std::invalid_argument("config: lidar_range must be > 0");
  if (lidar_fov <= 0.0 || lidar_fov > 2.0 * M_PI)
    throw std::invalid_argument("config: lidar_fov must be in (0, 2*pi]");
  if (lidar_beams < 2) throw std::invalid_argument("config: lidar_beams must be >= 2");
  if (submap_scans < 1) throw std::invalid_argument("config: submap_scans must be >= 1");
  strategy_from_name(strategy);
  deviation_config().validate();
  if (meanshift_bandwidth <= 0.0)
    throw std::invalid_argument("config: meanshift_bandwidth must be > 0");
  if (score_window <= 0.0) throw std::invalid_argument("config: score_window must be > 0");
  if (drift_xy_sigma < 0.0 || drift_theta_sigma < 0.0)
    throw std::invalid_argument("config: drift sigmas must be >= 0");
  if (optimization_strength < 0.0 || optimization_strength > 1.0)
    throw std::invalid_argument("config: optimization_strength must be in [0, 1]");
  if (optimization_jitter_xy < 0.0 || optimization_jitter_xy > 0.001)
    throw std::invalid_argument("config: optimization_jitter_xy must be in [0, 0.001]");
  if (optimization_jitter_theta < 0.0)
    throw std::invalid_argument("config: optimization_jitter_theta must be >= 0");
  if (loop_closure_travel <= 0.0)
    throw std::invalid_argument("config: loop_closure_travel must be > 0");
  if (goal_tolerance <= 0.0) throw std::invalid_argument("config: goal_tolerance must be > 0");
  if (max_stall_rounds < 1) throw std::invalid_argument("config: max_stall_rounds must be >= 1");
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\'')))
    return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

ExploreConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());

  ExploreConfig cfg;
  std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"resolution", [&](const std::string& v) { cfg.resolution = std::stod(v); }},
      {"inflation_radius", [&](const std::string& v) { cfg.inflation_radius = std::stoi(v); }},
      {"connectivity", [&](const std::string& v) { cfg.connectivity = std::stoi(v); }},
      {"lidar_range", [&](const std::string& v) { cfg.lidar_range = std::stod(v); }},
      {"lidar_fov", [&](const std::string& v) { cfg.lidar_fov = std::stod(v); }},
      {"lidar_beams", [&](const std::string& v) { cfg.lidar_beams = std::stoi(v); }},
      {"submap_scans", [&](const std::string& v) { cfg.submap_scans = std::stoi(v); }},
      {"strategy", [&](const std::string& v) { cfg.strategy = strip_quotes(v); }},
      {"epsilon", [&](const std::string& v) { cfg.epsilon = std::stod(v); }},
      {"angular_divisor", [&](const std::string& v) { cfg.angular_divisor = std::stod(v); }},
      {"meanshift_bandwidth",
       [&](const std::string& v) { cfg.meanshift_bandwidth = std::stod(v); }},
      {"score_lambda", [&](const std::string& v) { cfg.score_lambda = std::stod(v); }},
      {"score_window", [&](const std::string& v) { cfg.score_window = std::stod(v); }},
      {"drift_xy_sigma", [&](const std::string& v) { cfg.drift_xy_sigma = std::stod(v); }},
      {"drift_theta_sigma",
       [&](const std::string& v) { cfg.drift_theta_sigma = std::stod(v); }},
      {"optimization_strength",
       [&](const std::string& v) { cfg.optimization_strength = std::stod(v); }},
      {"optimization_jitter_xy",
       [&](const std::string& v) { cfg.optimization_jitter_xy = std::stod(v); }},
      {"optimization_jitter_theta",
       [&](const std::string& v) { cfg.optimization_jitter_theta = std::stod(v); }},
      {"loop_closure_travel",
       [&](const std::string& v) { cfg.loop_closure_travel = std::stod(v); }},
      {"seed",
       [&](const std::string& v) { cfg.seed = static_cast<std::uint32_t>(std::stoul(v)); }},
      {"goal_tolerance", [&](const std::string& v) { cfg.goal_tolerance = std::stod(v); }},
      {"max_stall_rounds",
       [&](const std::string& v) { cfg.max_stall_rounds = std::stoi(v); }},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": unknown config key '" + key + "'");
    try {
      it->second(value);
    } catch (const std::exception&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": bad value for '" + key + "': " + value);
    }
  }
  cfg.validate();
  return cfg;
}

void save_config(const ExploreConfig& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config " + path.string());
  std::ostringstream s;
  s.precision(17);
  s << "resolution = " << c.resolution << "\n"
    << "inflation_radius = " << c.inflation_radius << "\n"
    << "connectivity = " << c.connectivity << "\n"
    << "lidar_range = " << c.lidar_range << "\n"
    << "lidar_fov = " << c.lidar_fov << "\n"
    << "lidar_beams = " << c.lidar_beams << "\n"
    << "submap_scans = " << c.submap_scans << "\n"
    << "strategy = \"" << c.strategy << "\"\n"
    << "epsilon = " << c.epsilon << "\n"
    << "angular_divisor = " << c.angular_divisor << "\n"
    << "meanshift_bandwidth = " << c.meanshift_bandwidth << "\n"
    << "score_lambda = " << c.score_lambda << "\n"
    << "score_window = " << c.score_window << "\n"
    << "drift_xy_sigma = " << c.drift_xy_sigma << "\n"
    << "drift_theta_sigma = " << c.drift_theta_sigma << "\n"
    << "optimization_strength = " << c.optimization_strength << "\n"
    << "optimization_jitter_xy = " << c.optimization_jitter_xy << "\n"
    << "optimization_jitter_theta = " << c.optimization_jitter_theta << "\n"
    << "loop_closure_travel = " << c.loop_closure_travel << "\n"
    << "seed = " << c.seed << "\n"
    << "goal_tolerance = " << c.goal_tolerance << "\n"
    << "max_stall_rounds = " << c.max_stall_rounds << "\n";
  out << s.str();
}

}  // namespace frontiers
