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

#include "edgeplace/timing.hpp"

#include <algorithm>
#include <utility>

namespace edgeplace {

double completion_time(const Task& task, NodeId target, const DistanceMatrix& distances) {
  const double d = distances.at(task.local_node, target);
  return d * task.input_size + task.compute_time + d * task.output_size;
}

bool is_feasible(const Task& task, NodeId target, const DistanceMatrix& distances) {
  return completion_time(task, target, distances) <= task.qos_deadline;
}

std::vector<NodeId> feasible_targets(const Task& task, const Scenario& scenario) {
  std::vector<std::pair<double, NodeId>> timed;
  for (NodeId j = 0; j < scenario.num_nodes(); ++j) {
    const double delay = completion_time(task, j, scenario.distances);
    if (delay <= task.qos_deadline) timed.emplace_back(delay, j);
  }
  std::sort(timed.begin(), timed.end());
  std::vector<NodeId> out;
  out.reserve(timed.size());
  for (const auto& [delay, j] : timed) out.push_back(j);
  return out;
}

}  // namespace edgeplace
