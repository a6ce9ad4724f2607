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

#ifndef EDGEPLACE_EXACT_HPP_
#define EDGEPLACE_EXACT_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edgeplace/milp.hpp"
#include "edgeplace/model.hpp"

namespace edgeplace {

enum class SolverBackend { kBuiltinBnb, kExternalMilp };

enum class SolveStatus { kOptimal, kInfeasible, kLimitReached };

const char* to_string(SolveStatus status);
const char* to_string(QosMode mode);

struct SolveOptions {
  QosMode mode = QosMode::kAware;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::int64_t> node_limit;
  SolverBackend backend = SolverBackend::kBuiltinBnb;
  // Required when backend == kExternalMilp.
  std::shared_ptr<const MilpBackend> external;
  // brute_force refuses instances with more than this many task->node maps.
  std::int64_t enumeration_cap = 2'000'000;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Assignment> assignment;
  std::optional<CostReport> report;
  std::int64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> runtime{0};
  // Valid global lower bound on the optimum at termination.
  double best_bound = 0.0;
};

class InstanceTooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Depth-first branch-and-bound over task->node decisions. Placements are
// never branched on; they are induced by the schedule. Tasks are branched
// fewest-targets-first and children are tried cheapest-first. Among
// equal-cost optima the first one found is kept, so returned assignments are
// deterministic but not the unique optimum.
SolveOutcome solve(const Scenario& scenario, const SolveOptions& options = {});

// Enumerates every task->node map in lexicographic order (task 0 most
// significant). Ties go to the lexicographically smallest schedule.
SolveOutcome brute_force(const Scenario& scenario, const SolveOptions& options = {});

// Per-task decisions; nullopt means not yet assigned.
struct PartialAssignment {
  std::vector<std::optional<NodeId>> schedule;
};

// Cost of the assigned part (with induced placements) plus, for every
// unassigned task, its cheapest scheduling cost over mode-feasible nodes.
// Infinity when some unassigned task has no feasible node.
double lower_bound(const Scenario& scenario, const PartialAssignment& partial, QosMode mode);

// Nodes a task may run on under `mode`: deadline-feasible targets for
// kAware, all nodes (ascending id) for kLess.
std::vector<NodeId> candidate_nodes(const Task& task, const Scenario& scenario, QosMode mode);

}  // namespace edgeplace

#endif  // EDGEPLACE_EXACT_HPP_
