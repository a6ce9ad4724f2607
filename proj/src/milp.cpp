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

#include "edgeplace/milp.hpp"

#include <limits>

#include "edgeplace/timing.hpp"
#include "json.hpp"

namespace edgeplace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int MilpModel::placement_column(std::size_t service_slot, NodeId cloudlet) const {
  return static_cast<int>(service_slot) * (num_nodes - 1) + cloudlet;
}

int MilpModel::schedule_column(TaskId task, NodeId node) const {
  return static_cast<int>(placement_services.size()) * (num_nodes - 1) + task * num_nodes + node;
}

MilpModel build_milp(const Scenario& sc, QosMode mode) {
  MilpModel m;
  m.num_tasks = static_cast<int>(sc.tasks.size());
  m.num_nodes = sc.num_nodes();
  m.placement_services = sc.requested_services();
  const int nc = sc.num_cloudlets();

  std::vector<int> slot_of(sc.services.size(), -1);
  for (std::size_t k = 0; k < m.placement_services.size(); ++k) {
    const ServiceId s = m.placement_services[k];
    slot_of[static_cast<std::size_t>(s)] = static_cast<int>(k);
    for (NodeId j = 0; j < nc; ++j) {
      m.col_names.push_back("X_" + std::to_string(s) + "_" + std::to_string(j));
      m.objective.push_back(sc.services[static_cast<std::size_t>(s)].placement_cost[static_cast<std::size_t>(j)]);
      m.col_lower.push_back(0.0);
      m.col_upper.push_back(1.0);
      m.integer.push_back(true);
    }
  }
  for (const Task& t : sc.tasks) {
    for (NodeId j = 0; j < m.num_nodes; ++j) {
      m.col_names.push_back("Y_" + std::to_string(t.id) + "_" + std::to_string(j));
      m.objective.push_back(sc.schedule_cost(t, j));
      m.col_lower.push_back(0.0);
      const bool allowed = mode == QosMode::kLess || is_feasible(t, j, sc.distances);
      m.col_upper.push_back(allowed ? 1.0 : 0.0);
      m.integer.push_back(true);
    }
  }

  const auto add_row = [&m](std::string name, double lo, double hi) {
    m.row_names.push_back(std::move(name));
    m.row_lower.push_back(lo);
    m.row_upper.push_back(hi);
    return static_cast<int>(m.row_lower.size()) - 1;
  };

  for (NodeId j = 0; j < nc; ++j) {
    const int row = add_row("storage_" + std::to_string(j), -kInf,
                            sc.nodes[static_cast<std::size_t>(j)].storage_capacity);
    for (std::size_t k = 0; k < m.placement_services.size(); ++k) {
      const double h = sc.services[static_cast<std::size_t>(m.placement_services[k])].storage_demand;
      m.entries.push_back({row, m.placement_column(k, j), h});
    }
  }
  for (NodeId j = 0; j < nc; ++j) {
    const int row = add_row("compute_" + std::to_string(j), -kInf,
                            sc.nodes[static_cast<std::size_t>(j)].compute_capacity);
    for (const Task& t : sc.tasks) {
      m.entries.push_back({row, m.schedule_column(t.id, j), t.compute_time});
    }
  }
  for (const Task& t : sc.tasks) {
    const int row = add_row("assign_" + std::to_string(t.id), 1.0, 1.0);
    for (NodeId j = 0; j < m.num_nodes; ++j) m.entries.push_back({row, m.schedule_column(t.id, j), 1.0});
  }
  for (const Task& t : sc.tasks) {
    const auto slot = static_cast<std::size_t>(slot_of[static_cast<std::size_t>(t.service)]);
    for (NodeId j = 0; j < nc; ++j) {
      const int row = add_row("link_" + std::to_string(t.id) + "_" + std::to_string(j), -kInf, 0.0);
      m.entries.push_back({row, m.schedule_column(t.id, j), 1.0});
      m.entries.push_back({row, m.placement_column(slot, j), -1.0});
    }
  }
  return m;
}

std::string milp_to_json(const MilpModel& m) {
  using nlohmann::json;
  const auto bound = [](double v) { return std::isinf(v) ? json(nullptr) : json(v); };
  json doc;
  doc["sense"] = "minimize";
  json cols = json::array();
  for (int c = 0; c < m.num_cols(); ++c) {
    const auto uc = static_cast<std::size_t>(c);
    cols.push_back({{"name", m.col_names[uc]},
                    {"objective", m.objective[uc]},
                    {"lower", m.col_lower[uc]},
                    {"upper", m.col_upper[uc]},
                    {"integer", static_cast<bool>(m.integer[uc])}});
  }
  doc["columns"] = std::move(cols);
  json rows = json::array();
  for (int r = 0; r < m.num_rows(); ++r) {
    const auto ur = static_cast<std::size_t>(r);
    rows.push_back({{"name", m.row_names[ur]},
                    {"lower", bound(m.row_lower[ur])},
                    {"upper", bound(m.row_upper[ur])}});
  }
  doc["rows"] = std::move(rows);
  json entries = json::array();
  for (const auto& e : m.entries) entries.push_back(json::array({e.row, e.col, e.value}));
  doc["entries"] = std::move(entries);
  return doc.dump(1);
}

Assignment decode_milp_solution(const Scenario& sc, const MilpModel& m,
                                const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != m.num_cols()) {
    throw std::invalid_argument("solution vector length does not match the model");
  }
  Assignment a;
  for (const Task& t : sc.tasks) {
    for (NodeId j = 0; j < m.num_nodes; ++j) {
      if (values[static_cast<std::size_t>(m.schedule_column(t.id, j))] > 0.5) {
        a.schedules.emplace(t.id, j);
        break;
      }
    }
    if (!a.schedules.contains(t.id)) a.unserved.insert(t.id);
  }
  a.placements = induced_placements(sc, a.schedules);
  return a;
}

}  // namespace edgeplace
