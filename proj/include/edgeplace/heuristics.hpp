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

#ifndef EDGEPLACE_HEURISTICS_HPP_
#define EDGEPLACE_HEURISTICS_HPP_

#include "edgeplace/model.hpp"

namespace edgeplace {

// Per-cloudlet greedy. Each cloudlet (ascending id) repeatedly takes its
// attached task with the tightest deadline whose service still fits, places
// that service, and schedules every attached task of the service that fits
// the remaining compute. Leftovers go to the cloud when they meet their
// deadline there and are reported as unserved otherwise.
Assignment local_serving(const Scenario& scenario);

struct GlobalServingOptions {
  // Profit divisor for cloud pairs, which carry no placement cost.
  double cloud_profit_divisor = 1.0;
  // Treat re-using a placed service as free (infinite profit) instead of
  // dividing by its original placement cost.
  bool reuse_is_free = false;
};

// Profit-driven greedy across all nodes. Each round scores every
// (requested service, node) pair by the number of open tasks of that
// service it can take (deadline-feasible, packed by ascending compute time
// into the remaining compute) divided by the placement cost, and commits
// the best pair. Ties prefer the cloud, then lower node id, then lower
// service id. Stops with the rest unserved when no pair can take a task.
Assignment global_serving(const Scenario& scenario, const GlobalServingOptions& options = {});

}  // namespace edgeplace

#endif  // EDGEPLACE_HEURISTICS_HPP_
