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

#ifndef EDGEPLACE_GENERATION_PARAMS_HPP_
#define EDGEPLACE_GENERATION_PARAMS_HPP_

#include <optional>

namespace edgeplace {

// Closed interval [low, high] used for random draws.
struct Range {
  double low = 0.0;
  double high = 0.0;

  bool contains(double v) const { return low <= v && v <= high; }
  bool operator==(const Range&) const = default;
};

// Knobs controlling scenario generation. Defaults reproduce the reference
// simulation setup (400 users, 1000 services, 4 cloudlets, beta = 3).
struct GenerationParams {
  int num_tasks = 400;
  int num_services = 1000;
  int num_cloudlets = 4;
  double beta = 3.0;
  double qos_factor = 2.5;
  double grid_size = 100.0;
  double cloud_distance_multiple = 5.0;
  // Time units per grid unit per packet-size unit.
  double distance_scale = 0.001;
  Range packet_size{2.0, 4.0};
  Range compute_time{2.0, 4.0};
  Range cloud_schedule_cost{2.0, 4.0};
  Range placement_cost{2.0, 4.0};
  Range storage_demand{1.0, 2.0};
  Range cloudlet_storage{10.0, 20.0};
  // Unset means "derive from num_tasks": [3|T|/(4n), 3|T|/(2n)] for n cloudlets.
  std::optional<Range> cloudlet_compute;
  // Draw the two-valued ranges (packet sizes, compute time and the three
  // cost ranges) from {low, high} instead of the continuous interval.
  bool draw_discrete = false;

  Range effective_cloudlet_compute() const;

  // Throws std::invalid_argument naming the first bad field.
  void validate() const;

  bool operator==(const GenerationParams&) const = default;
};

}  // namespace edgeplace

#endif  // EDGEPLACE_GENERATION_PARAMS_HPP_
