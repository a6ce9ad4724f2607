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

#ifndef EDGEPLACE_MODEL_HPP_
#define EDGEPLACE_MODEL_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgeplace/generation_params.hpp"

namespace edgeplace {

using NodeId = int;
using ServiceId = int;
using TaskId = int;

// Capacity sentinel for the cloud.
inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();
inline bool is_unbounded(double capacity) { return std::isinf(capacity); }

class UnknownIdError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NodeKind { kCloudlet, kCloud };

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::kCloudlet;
  std::optional<Point> position;
  double storage_capacity = 0.0;
  double compute_capacity = 0.0;

  bool is_cloud() const { return kind == NodeKind::kCloud; }
  bool operator==(const Node&) const = default;
};

struct Service {
  ServiceId id = 0;
  double storage_demand = 0.0;
  // Indexed by cloudlet id. The cloud hosts every service for free and has
  // no entry here.
  std::vector<double> placement_cost;
  // Indexed by node id, cloud included.
  std::vector<double> schedule_cost;

  bool operator==(const Service&) const = default;
};

struct Task {
  TaskId id = 0;
  ServiceId service = 0;
  NodeId local_node = 0;
  double input_size = 0.0;
  double output_size = 0.0;
  double compute_time = 0.0;
  double qos_deadline = 0.0;

  bool operator==(const Task&) const = default;
};

// Symmetric per-packet-unit transfer times between nodes, zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t num_nodes)
      : size_(num_nodes), entries_(num_nodes * num_nodes, 0.0) {}

  // Validates symmetry, zero diagonal and nonnegativity.
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return size_; }

  // Throws UnknownIdError on out-of-range ids.
  double at(NodeId a, NodeId b) const;
  // Unchecked.
  double operator()(NodeId a, NodeId b) const {
    return entries_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)];
  }
  // Sets both (a, b) and (b, a).
  void set(NodeId a, NodeId b, double d);

  std::vector<std::vector<double>> rows() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<double> entries_;
};

// A full problem instance. Node ids equal their index; cloudlets come first
// and the single cloud is the last node.
struct Scenario {
  std::vector<Node> nodes;
  std::vector<Service> services;
  std::vector<Task> tasks;
  DistanceMatrix distances;
  GenerationParams params;
  std::uint64_t seed = 0;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_cloudlets() const { return num_nodes() - 1; }
  NodeId cloud() const { return num_nodes() - 1; }
  bool is_cloud(NodeId j) const { return j == cloud(); }

  // Scheduling cost of task t on node j.
  double schedule_cost(const Task& t, NodeId j) const {
    return services[static_cast<std::size_t>(t.service)].schedule_cost[static_cast<std::size_t>(j)];
  }

  // Services requested by at least one task, ascending.
  std::vector<ServiceId> requested_services() const;

  // Throws ScenarioError describing the first broken invariant.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// A solution. Cloud placements are implicit and never listed.
struct Assignment {
  std::set<std::pair<ServiceId, NodeId>> placements;
  std::map<TaskId, NodeId> schedules;
  std::set<TaskId> unserved;

  bool operator==(const Assignment&) const = default;
};

struct Violation {
  // 1 storage, 2 compute, 3 schedule-exactly-once, 4 deadline,
  // 7 schedule-without-placement.
  int constraint = 0;
  std::optional<NodeId> node;
  std::optional<TaskId> task;
  std::optional<ServiceId> service;
  // How far the constraint is exceeded (capacity excess, deadline overrun);
  // 1 for the purely combinatorial constraints.
  double magnitude = 0.0;

  std::string describe() const;
};

struct CostReport {
  double placement_cost = 0.0;
  double scheduling_cost = 0.0;
  double total = 0.0;
  std::map<TaskId, double> per_task_delay;
  std::vector<Violation> violations;
  // Tasks not scheduled, plus scheduled tasks finishing after their deadline.
  int drop_count = 0;
  double drop_fraction = 0.0;
};

CostReport evaluate_objective(const Scenario& scenario, const Assignment& assignment);

std::vector<Violation> validate(const Scenario& scenario, const Assignment& assignment);

// Records for the given constraint numbers only.
std::vector<Violation> validate(const Scenario& scenario, const Assignment& assignment,
                                std::span<const int> constraints);
inline std::vector<Violation> validate(const Scenario& scenario, const Assignment& assignment,
                                       std::initializer_list<int> constraints) {
  return validate(scenario, assignment, std::span<const int>(constraints.begin(), constraints.size()));
}

// {(M(t), j) : t scheduled on cloudlet j}.
std::set<std::pair<ServiceId, NodeId>> induced_placements(
    const Scenario& scenario, const std::map<TaskId, NodeId>& schedules);

}  // namespace edgeplace

#endif  // EDGEPLACE_MODEL_HPP_
