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

#include <chrono>
#include <limits>

#include "edgeplace/exact.hpp"

namespace edgeplace {

SolveOutcome brute_force(const Scenario& scenario, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t num_tasks = scenario.tasks.size();
  const auto num_nodes = static_cast<std::int64_t>(scenario.num_nodes());

  std::int64_t combinations = 1;
  for (std::size_t i = 0; i < num_tasks; ++i) {
    if (combinations > options.enumeration_cap / num_nodes) {
      throw InstanceTooLargeError("brute force over " + std::to_string(num_tasks) + " tasks and " +
                                  std::to_string(num_nodes) + " nodes exceeds the enumeration cap");
    }
    combinations *= num_nodes;
  }

  const std::vector<int> checked = options.mode == QosMode::kAware ? std::vector<int>{1, 2, 4, 7}
                                                                   : std::vector<int>{1, 2, 7};
  SolveOutcome out;
  double best = std::numeric_limits<double>::infinity();
  std::vector<NodeId> digits(num_tasks, 0);
  for (std::int64_t k = 0; k < combinations; ++k) {
    Assignment a;
    for (std::size_t i = 0; i < num_tasks; ++i) {
      a.schedules.emplace(static_cast<TaskId>(i), digits[i]);
    }
    a.placements = induced_placements(scenario, a.schedules);
    if (validate(scenario, a, checked).empty()) {
      CostReport report = evaluate_objective(scenario, a);
      if (report.total < best) {
        best = report.total;
        out.assignment = std::move(a);
        out.report = std::move(report);
      }
    }
    // Odometer increment, last task least significant.
    for (std::size_t i = num_tasks; i-- > 0;) {
      if (++digits[i] < num_nodes) break;
      digits[i] = 0;
    }
  }
  out.nodes_explored = combinations;
  out.status = out.assignment ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
  out.best_bound = best;
  out.runtime = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace edgeplace
