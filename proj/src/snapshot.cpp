#include "frontiers/snapshot.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "frontiers/grid_io.hpp"

namespace frontiers {

namespace {

using nlohmann::json;

json pose_to_json(const Pose2D& p) { return {{"x", p.x}, {"y", p.y}, {"theta", p.theta}}; }

Pose2D pose_from_json(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("theta").get<double>()};
}

std::string grid_filename(int id) {
  std::ostringstream name;
  name << "submap_" << std::setw(4) << std::setfill('0') << id << ".pgm";
  return name.str();
}

}  // namespace

void save_snapshot(const SubmapGraph& graph, int inflation_radius, int connectivity,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["inflation_radius"] = inflation_radius;
  manifest["connectivity"] = connectivity;
  json submaps = json::array();
  for (int id = 0; id < graph.count(); ++id) {
    const Submap& s = graph.submap(id);
    save_grid_pgm(s.raw, dir / grid_filename(id));
    json frontiers_json = json::array();
    for (const Cell& c : s.local_frontiers.points)
      frontiers_json.push_back({c.x(), c.y()});
    submaps.push_back({{"id", id},
                       {"grid", grid_filename(id)},
                       {"cp", pose_to_json(s.current_pose)},
                       {"pp", pose_to_json(s.previous_pose)},
                       {"cd",
                        {{"dx", s.cumulative_deviation.dx},
                         {"dy", s.cumulative_deviation.dy},
                         {"dtheta", s.cumulative_deviation.dtheta}}},
                       {"finished", s.finished},
                       {"seed", {s.detection_seed.x(), s.detection_seed.y()}},
                       {"frontiers", std::move(frontiers_json)}});
  }
  manifest["submaps"] = std::move(submaps);
  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write snapshot manifest in " + dir.string());
  out << manifest.dump() << "\n";
}

Snapshot load_snapshot(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("cannot read " + (dir / "manifest.json").string());
  json manifest;
  in >> manifest;

  Snapshot snapshot;
  snapshot.inflation_radius = manifest.at("inflation_radius").get<int>();
  snapshot.connectivity = manifest.value("connectivity", 8);
  for (const json& js : manifest.at("submaps")) {
    Submap s;
    s.id = js.at("id").get<int>();
    s.raw = load_grid_pgm(dir / js.at("grid").get<std::string>());
    s.inflated = inflate(s.raw, snapshot.inflation_radius);
    s.current_pose = pose_from_json(js.at("cp"));
    s.previous_pose = pose_from_json(js.at("pp"));
    s.cumulative_deviation = {js.at("cd").at("dx").get<double>(),
                              js.at("cd").at("dy").get<double>(),
                              js.at("cd").at("dtheta").get<double>()};
    s.finished = js.at("finished").get<bool>();
    s.detection_seed = Cell(js.at("seed")[0].get<int>(), js.at("seed")[1].get<int>());
    s.local_frontiers.submap_id = s.id;
    for (const json& cell : js.at("frontiers"))
      s.local_frontiers.points.emplace_back(cell[0].get<int>(), cell[1].get<int>());
    s.cache_observed_cells();
    snapshot.graph.add_submap(std::move(s));
  }
  return snapshot;
}

}  // namespace frontiers
