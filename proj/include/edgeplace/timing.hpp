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

#ifndef EDGEPLACE_TIMING_HPP_
#define EDGEPLACE_TIMING_HPP_

#include <vector>

#include "edgeplace/model.hpp"

namespace edgeplace {

// d * t_in + sigma + d * t_out, with d the distance from the task's local
// cloudlet to `target`. No queueing: load on the target does not matter.
// Throws UnknownIdError for ids outside the matrix.
double completion_time(const Task& task, NodeId target, const DistanceMatrix& distances);

// completion_time <= deadline, compared exactly.
bool is_feasible(const Task& task, NodeId target, const DistanceMatrix& distances);

// Deadline-feasible nodes ordered by completion time, then node id.
std::vector<NodeId> feasible_targets(const Task& task, const Scenario& scenario);

}  // namespace edgeplace

#endif  // EDGEPLACE_TIMING_HPP_
