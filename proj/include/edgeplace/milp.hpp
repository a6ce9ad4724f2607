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

#ifndef EDGEPLACE_MILP_HPP_
#define EDGEPLACE_MILP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "edgeplace/model.hpp"

namespace edgeplace {

enum class QosMode { kAware, kLess };

// Standard-form 0/1 program: minimize c'x subject to
// row_lower <= A x <= row_upper, col_lower <= x <= col_upper, x integer.
// A is stored as (row, col, value) triplets.
struct MilpModel {
  struct Entry {
    int row = 0;
    int col = 0;
    double value = 0.0;
  };

  std::vector<std::string> col_names;
  std::vector<double> objective;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<bool> integer;

  std::vector<std::string> row_names;
  std::vector<double> row_lower;
  std::vector<double> row_upper;
  std::vector<Entry> entries;

  // Column bookkeeping for decoding a solution vector.
  int num_tasks = 0;
  int num_nodes = 0;
  std::vector<ServiceId> placement_services;  // requested services, one X block each
  int placement_column(std::size_t service_slot, NodeId cloudlet) const;
  int schedule_column(TaskId task, NodeId node) const;

  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(row_lower.size()); }
};

// Columns: X[s][j] for each requested service and cloudlet, then Y[t][j] for
// every task and node. Rows: storage (per cloudlet), compute (per cloudlet),
// assign-once (per task), Y[t][j] - X[M(t)][j] <= 0 (per task, cloudlet).
// In QoS-aware mode, deadline-infeasible Y columns get an upper bound of 0.
MilpModel build_milp(const Scenario& scenario, QosMode mode);

// JSON interchange for external solvers; infinite row bounds become null.
std::string milp_to_json(const MilpModel& model);

// Reads Y columns (> 0.5) back into an assignment with induced placements.
Assignment decode_milp_solution(const Scenario& scenario, const MilpModel& model,
                                const std::vector<double>& values);

// Adapter for an external MILP engine. An empty result means infeasible.
class MilpBackend {
 public:
  virtual ~MilpBackend() = default;
  // Column values of an optimal solution, or nullopt if the model is infeasible.
  virtual std::optional<std::vector<double>> solve(const MilpModel& model) const = 0;
};

}  // namespace edgeplace

#endif  // EDGEPLACE_MILP_HPP_
