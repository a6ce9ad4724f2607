// Copyright 2026 The edgeplace Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include "edgeplace/scenario_gen.hpp"
#include "edgeplace/json_util.hpp"

namespace edgeplace {

using nlohmann::json;

namespace {

json range_to_json(const Range& r) { return json::array({r.low, r.high}); }

Range range_from_json(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("key \"" + key + "\" must be a [low, high] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json capacity_to_json(double c) {
  if (is_unbounded(c)) return "unbounded";
  return c;
}

double capacity_from_json(const json& j, const std::string& key) {
  if (j.is_string() && j.get<std::string>() == "unbounded") return kUnbounded;
  if (!j.is_number()) throw ParseError("key \"" + key + "\" must be a number or \"unbounded\"");
  return j.get<double>();
}

json params_to_json(const GenerationParams& p) {
  json j;
  j["num_tasks"] = p.num_tasks;
  j["num_services"] = p.num_services;
  j["num_cloudlets"] = p.num_cloudlets;
  j["beta"] = p.beta;
  j["qos_factor"] = p.qos_factor;
  j["grid_size"] = p.grid_size;
  j["cloud_distance_multiple"] = p.cloud_distance_multiple;
  j["distance_scale"] = p.distance_scale;
  j["packet_size_range"] = range_to_json(p.packet_size);
  j["compute_time_range"] = range_to_json(p.compute_time);
  j["cloud_schedule_cost_range"] = range_to_json(p.cloud_schedule_cost);
  j["placement_cost_range"] = range_to_json(p.placement_cost);
  j["storage_demand_range"] = range_to_json(p.storage_demand);
  j["cloudlet_storage_range"] = range_to_json(p.cloudlet_storage);
  j["cloudlet_compute_range"] =
      p.cloudlet_compute ? range_to_json(*p.cloudlet_compute) : json(nullptr);
  j["draw_discrete"] = p.draw_discrete;
  return j;
}

GenerationParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("key \"params\" must be an object");
  GenerationParams p;
  json_util::read_optional(j, "num_tasks", p.num_tasks);
  json_util::read_optional(j, "num_services", p.num_services);
  json_util::read_optional(j, "num_cloudlets", p.num_cloudlets);
  json_util::read_optional(j, "beta", p.beta);
  json_util::read_optional(j, "qos_factor", p.qos_factor);
  json_util::read_optional(j, "grid_size", p.grid_size);
  json_util::read_optional(j, "cloud_distance_multiple", p.cloud_distance_multiple);
  json_util::read_optional(j, "distance_scale", p.distance_scale);
  json_util::read_optional(j, "draw_discrete", p.draw_discrete);
  const auto range = [&j](const char* key, Range& out) {
    if (j.contains(key)) out = range_from_json(j.at(key), key);
  };
  range("packet_size_range", p.packet_size);
  range("compute_time_range", p.compute_time);
  range("cloud_schedule_cost_range", p.cloud_schedule_cost);
  range("placement_cost_range", p.placement_cost);
  range("storage_demand_range", p.storage_demand);
  range("cloudlet_storage_range", p.cloudlet_storage);
  if (j.contains("cloudlet_compute_range") && !j.at("cloudlet_compute_range").is_null()) {
    p.cloudlet_compute = range_from_json(j.at("cloudlet_compute_range"), "cloudlet_compute_range");
  }
  return p;
}

// Node-keyed cost map: {"<node id>": cost}.
json cost_map_to_json(const std::vector<double>& costs) {
  json j = json::object();
  for (std::size_t k = 0; k < costs.size(); ++k) j[std::to_string(k)] = costs[k];
  return j;
}

std::vector<double> cost_map_from_json(const json& j, const std::string& key, std::size_t size) {
  if (!j.is_object()) throw ParseError("key \"" + key + "\" must be an object");
  std::vector<double> out(size, 0.0);
  std::vector<bool> seen(size, false);
  for (const auto& [k, v] : j.items()) {
    std::size_t idx = 0;
    try {
      std::size_t pos = 0;
      idx = std::stoul(k, &pos);
      if (pos != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw ParseError("key \"" + key + "\" has non-numeric node id \"" + k + "\"");
    }
    if (idx >= size) {
      throw ParseError("key \"" + key + "\" references node " + k + " outside the allowed range");
    }
    if (!v.is_number()) throw ParseError("key \"" + key + "\" entry " + k + " is not a number");
    out[idx] = v.get<double>();
    seen[idx] = true;
  }
  for (std::size_t k = 0; k < size; ++k) {
    if (!seen[k]) throw ParseError("key \"" + key + "\" lacks an entry for node " + std::to_string(k));
  }
  return out;
}

}  // namespace

std::string save_params(const GenerationParams& params) { return params_to_json(params).dump(2); }

GenerationParams load_params(const std::string& document) {
  return params_from_json(json_util::parse(document));
}

std::string save_scenario(const Scenario& sc) {
  json doc;
  doc["seed"] = sc.seed;
  doc["params"] = params_to_json(sc.params);
  json nodes = json::array();
  for (const Node& n : sc.nodes) {
    json jn;
    jn["id"] = n.id;
    jn["kind"] = n.is_cloud() ? "cloud" : "cloudlet";
    jn["position"] = n.position ? json::array({n.position->x, n.position->y}) : json(nullptr);
    jn["storage_capacity"] = capacity_to_json(n.storage_capacity);
    jn["compute_capacity"] = capacity_to_json(n.compute_capacity);
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  json services = json::array();
  for (const Service& s : sc.services) {
    services.push_back({{"id", s.id},
                        {"storage_demand", s.storage_demand},
                        {"placement_cost", cost_map_to_json(s.placement_cost)},
                        {"schedule_cost", cost_map_to_json(s.schedule_cost)}});
  }
  doc["services"] = std::move(services);
  json tasks = json::array();
  for (const Task& t : sc.tasks) {
    tasks.push_back({{"id", t.id},
                     {"service", t.service},
                     {"local_node", t.local_node},
                     {"input_size", t.input_size},
                     {"output_size", t.output_size},
                     {"compute_time", t.compute_time},
                     {"qos_deadline", t.qos_deadline}});
  }
  doc["tasks"] = std::move(tasks);
  doc["distances"] = sc.distances.rows();
  return doc.dump(1);
}

Scenario load_scenario(const std::string& document) {
  using json_util::require;
  const json doc = json_util::parse(document);
  if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
  Scenario sc;
  // Check every top-level key up front so the error names the missing one.
  for (const char* key : {"seed", "params", "nodes", "services", "tasks", "distances"}) {
    require(doc, key);
  }
  sc.seed = json_util::get<std::uint64_t>(doc, "seed");
  sc.params = params_from_json(doc.at("params"));

  const json& nodes = doc.at("nodes");
  if (!nodes.is_array()) throw ParseError("key \"nodes\" must be an array");
  for (const json& jn : nodes) {
    Node n;
    n.id = json_util::get<int>(jn, "id");
    const auto kind = json_util::get<std::string>(jn, "kind");
    if (kind == "cloud") {
      n.kind = NodeKind::kCloud;
    } else if (kind == "cloudlet") {
      n.kind = NodeKind::kCloudlet;
    } else {
      throw ParseError("key \"kind\" must be \"cloud\" or \"cloudlet\"");
    }
    const json& pos = require(jn, "position");
    if (!pos.is_null()) {
      const Range xy = range_from_json(pos, "position");
      n.position = Point{xy.low, xy.high};
    }
    n.storage_capacity = capacity_from_json(require(jn, "storage_capacity"), "storage_capacity");
    n.compute_capacity = capacity_from_json(require(jn, "compute_capacity"), "compute_capacity");
    sc.nodes.push_back(n);
  }
  const std::size_t num_nodes = sc.nodes.size();
  const std::size_t num_cloudlets = num_nodes == 0 ? 0 : num_nodes - 1;

  const json& services = doc.at("services");
  if (!services.is_array()) throw ParseError("key \"services\" must be an array");
  for (const json& js : services) {
    Service s;
    s.id = json_util::get<int>(js, "id");
    s.storage_demand = json_util::get<double>(js, "storage_demand");
    s.placement_cost = cost_map_from_json(require(js, "placement_cost"), "placement_cost", num_cloudlets);
    s.schedule_cost = cost_map_from_json(require(js, "schedule_cost"), "schedule_cost", num_nodes);
    sc.services.push_back(std::move(s));
  }

  const json& tasks = doc.at("tasks");
  if (!tasks.is_array()) throw ParseError("key \"tasks\" must be an array");
  for (const json& jt : tasks) {
    Task t;
    t.id = json_util::get<int>(jt, "id");
    t.service = json_util::get<int>(jt, "service");
    t.local_node = json_util::get<int>(jt, "local_node");
    t.input_size = json_util::get<double>(jt, "input_size");
    t.output_size = json_util::get<double>(jt, "output_size");
    t.compute_time = json_util::get<double>(jt, "compute_time");
    t.qos_deadline = json_util::get<double>(jt, "qos_deadline");
    sc.tasks.push_back(t);
  }

  const json& dist = doc.at("distances");
  std::vector<std::vector<double>> rows;
  try {
    rows = dist.get<std::vector<std::vector<double>>>();
  } catch (const json::exception&) {
    throw ParseError("key \"distances\" must be a matrix of numbers");
  }
  sc.distances = DistanceMatrix::from_rows(rows);
  sc.validate();
  return sc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

Scenario read_scenario_file(const std::string& path) { return load_scenario(read_text_file(path)); }

}  // namespace edgeplace
