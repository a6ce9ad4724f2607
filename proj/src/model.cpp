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

#include "edgeplace/model.hpp"

#include <sstream>

#include "edgeplace/timing.hpp"

namespace edgeplace {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DistanceMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ScenarioError("distance matrix is not square (row " + std::to_string(i) + ")");
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const double d = rows[i][k];
      if (!(d >= 0.0) || std::isinf(d)) {
        throw ScenarioError("distance matrix entry (" + std::to_string(i) + ", " +
                            std::to_string(k) + ") is not a finite nonnegative value");
      }
      if (i == k && d != 0.0) {
        throw ScenarioError("distance matrix diagonal entry " + std::to_string(i) +
                            " is nonzero");
      }
      if (rows[k][i] != d) {
        throw ScenarioError("distance matrix is asymmetric at (" + std::to_string(i) + ", " +
                            std::to_string(k) + ")");
      }
      m.entries_[i * m.size_ + k] = d;
    }
  }
  return m;
}

double DistanceMatrix::at(NodeId a, NodeId b) const {
  const auto n = static_cast<NodeId>(size_);
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw UnknownIdError("unknown node id in distance lookup (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
  }
  return (*this)(a, b);
}

void DistanceMatrix::set(NodeId a, NodeId b, double d) {
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  entries_[ua * size_ + ub] = d;
  entries_[ub * size_ + ua] = d;
}

std::vector<std::vector<double>> DistanceMatrix::rows() const {
  std::vector<std::vector<double>> out(size_, std::vector<double>(size_));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t k = 0; k < size_; ++k) out[i][k] = entries_[i * size_ + k];
  }
  return out;
}

std::vector<ServiceId> Scenario::requested_services() const {
  std::vector<bool> seen(services.size(), false);
  for (const Task& t : tasks) seen[static_cast<std::size_t>(t.service)] = true;
  std::vector<ServiceId> out;
  for (std::size_t m = 0; m < seen.size(); ++m) {
    if (seen[m]) out.push_back(static_cast<ServiceId>(m));
  }
  return out;
}

namespace {

bool finite_nonneg(double v) { return v >= 0.0 && std::isfinite(v); }
bool finite_pos(double v) { return v > 0.0 && std::isfinite(v); }

[[noreturn]] void fail(const std::string& what) { throw ScenarioError(what); }

}  // namespace

void Scenario::validate() const {
  if (nodes.empty()) fail("scenario has no nodes");
  int clouds = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Node& n = nodes[j];
    const std::string where = "node " + std::to_string(j);
    if (n.id != static_cast<NodeId>(j)) fail(where + ": id does not match its index");
    if (n.is_cloud()) {
      ++clouds;
      if (static_cast<NodeId>(j) != cloud()) fail(where + ": the cloud must be the last node");
      if (!is_unbounded(n.storage_capacity) || !is_unbounded(n.compute_capacity)) {
        fail(where + ": cloud capacities must be unbounded");
      }
    } else {
      if (!finite_nonneg(n.storage_capacity) || !finite_nonneg(n.compute_capacity)) {
        fail(where + ": cloudlet capacities must be finite and nonnegative");
      }
      if (!n.position) fail(where + ": cloudlet has no position");
    }
  }
  if (clouds != 1) fail("scenario must contain exactly one cloud node");

  const auto num_nodes_sz = nodes.size();
  const auto num_cloudlets_sz = num_nodes_sz - 1;
  for (std::size_t m = 0; m < services.size(); ++m) {
    const Service& s = services[m];
    const std::string where = "service " + std::to_string(m);
    if (s.id != static_cast<ServiceId>(m)) fail(where + ": id does not match its index");
    if (!finite_nonneg(s.storage_demand)) fail(where + ": storage demand must be >= 0");
    if (s.placement_cost.size() != num_cloudlets_sz) {
      fail(where + ": placement_cost must have one entry per cloudlet");
    }
    if (s.schedule_cost.size() != num_nodes_sz) {
      fail(where + ": schedule_cost must have one entry per node");
    }
    for (double c : s.placement_cost) {
      if (!finite_nonneg(c)) fail(where + ": negative placement cost");
    }
    for (double c : s.schedule_cost) {
      if (!finite_nonneg(c)) fail(where + ": negative schedule cost");
    }
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const std::string where = "task " + std::to_string(i);
    if (t.id != static_cast<TaskId>(i)) fail(where + ": id does not match its index");
    if (t.service < 0 || static_cast<std::size_t>(t.service) >= services.size()) {
      fail(where + ": unknown service " + std::to_string(t.service));
    }
    if (t.local_node < 0 || t.local_node >= cloud()) {
      fail(where + ": local node must be a cloudlet");
    }
    if (!finite_pos(t.input_size) || !finite_pos(t.output_size) || !finite_pos(t.compute_time) ||
        !finite_pos(t.qos_deadline)) {
      fail(where + ": sizes, compute time and deadline must be positive");
    }
    if (t.qos_deadline < t.compute_time) fail(where + ": deadline is below compute time");
  }

  if (distances.size() != num_nodes_sz) fail("distance matrix size does not match node count");
  // Re-runs the matrix invariants in case it was filled through set().
  DistanceMatrix::from_rows(distances.rows());
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "constraint " << constraint;
  if (node) os << " node " << *node;
  if (task) os << " task " << *task;
  if (service) os << " service " << *service;
  os << " magnitude " << magnitude;
  return os.str();
}

namespace {

void check_ids(const Scenario& sc, const Assignment& a) {
  const auto num_services = static_cast<ServiceId>(sc.services.size());
  const auto num_tasks = static_cast<TaskId>(sc.tasks.size());
  for (const auto& [m, j] : a.placements) {
    if (m < 0 || m >= num_services) {
      throw UnknownIdError("placement references unknown service " + std::to_string(m));
    }
    if (j < 0 || j >= sc.cloud()) {
      throw UnknownIdError("placement references node " + std::to_string(j) +
                           ", which is not a cloudlet");
    }
  }
  for (const auto& [t, j] : a.schedules) {
    if (t < 0 || t >= num_tasks) {
      throw UnknownIdError("schedule references unknown task " + std::to_string(t));
    }
    if (j < 0 || j >= sc.num_nodes()) {
      throw UnknownIdError("schedule references unknown node " + std::to_string(j));
    }
  }
  for (TaskId t : a.unserved) {
    if (t < 0 || t >= num_tasks) {
      throw UnknownIdError("unserved set references unknown task " + std::to_string(t));
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Scenario& sc, const Assignment& a) {
  check_ids(sc, a);
  std::vector<Violation> out;
  const auto nc = static_cast<std::size_t>(sc.num_cloudlets());

  // (1) storage per cloudlet.
  std::vector<double> storage(nc, 0.0);
  for (const auto& [m, j] : a.placements) {
    storage[static_cast<std::size_t>(j)] += sc.services[static_cast<std::size_t>(m)].storage_demand;
  }
  for (std::size_t j = 0; j < nc; ++j) {
    const double cap = sc.nodes[j].storage_capacity;
    if (!is_unbounded(cap) && storage[j] > cap) {
      out.push_back({1, static_cast<NodeId>(j), std::nullopt, std::nullopt, storage[j] - cap});
    }
  }

  // (2) compute per cloudlet.
  std::vector<double> compute(nc, 0.0);
  for (const auto& [t, j] : a.schedules) {
    if (sc.is_cloud(j)) continue;
    compute[static_cast<std::size_t>(j)] += sc.tasks[static_cast<std::size_t>(t)].compute_time;
  }
  for (std::size_t j = 0; j < nc; ++j) {
    const double cap = sc.nodes[j].compute_capacity;
    if (!is_unbounded(cap) && compute[j] > cap) {
      out.push_back({2, static_cast<NodeId>(j), std::nullopt, std::nullopt, compute[j] - cap});
    }
  }

  // (3) every task scheduled exactly once.
  for (const Task& t : sc.tasks) {
    const bool scheduled = a.schedules.contains(t.id);
    const bool dropped = a.unserved.contains(t.id);
    if (!scheduled || dropped) out.push_back({3, std::nullopt, t.id, std::nullopt, 1.0});
  }

  // (4) deadlines and (7) schedule implies placement.
  for (const auto& [tid, j] : a.schedules) {
    const Task& t = sc.tasks[static_cast<std::size_t>(tid)];
    const double delay = completion_time(t, j, sc.distances);
    if (delay > t.qos_deadline) {
      out.push_back({4, j, tid, std::nullopt, delay - t.qos_deadline});
    }
    if (!sc.is_cloud(j) && !a.placements.contains({t.service, j})) {
      out.push_back({7, j, tid, t.service, 1.0});
    }
  }
  return out;
}

std::vector<Violation> validate(const Scenario& sc, const Assignment& a,
                                std::span<const int> constraints) {
  std::vector<Violation> all = validate(sc, a);
  std::vector<Violation> out;
  for (const Violation& v : all) {
    for (int c : constraints) {
      if (v.constraint == c) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

CostReport evaluate_objective(const Scenario& sc, const Assignment& a) {
  CostReport r;
  r.violations = validate(sc, a);  // also checks ids
  for (const auto& [m, j] : a.placements) {
    r.placement_cost += sc.services[static_cast<std::size_t>(m)].placement_cost[static_cast<std::size_t>(j)];
  }
  int on_time = 0;
  for (const auto& [tid, j] : a.schedules) {
    const Task& t = sc.tasks[static_cast<std::size_t>(tid)];
    r.scheduling_cost += sc.schedule_cost(t, j);
    const double delay = completion_time(t, j, sc.distances);
    r.per_task_delay[tid] = delay;
    if (delay <= t.qos_deadline) ++on_time;
  }
  r.total = r.placement_cost + r.scheduling_cost;
  const int num_tasks = static_cast<int>(sc.tasks.size());
  r.drop_count = num_tasks - on_time;
  r.drop_fraction = num_tasks == 0 ? 0.0 : static_cast<double>(r.drop_count) / num_tasks;
  return r;
}

std::set<std::pair<ServiceId, NodeId>> induced_placements(
    const Scenario& sc, const std::map<TaskId, NodeId>& schedules) {
  std::set<std::pair<ServiceId, NodeId>> out;
  for (const auto& [tid, j] : schedules) {
    if (sc.is_cloud(j)) continue;
    out.emplace(sc.tasks.at(static_cast<std::size_t>(tid)).service, j);
  }
  return out;
}

}  // namespace edgeplace
