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

#include "edgeplace/scenario_gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgeplace/rng.hpp"

namespace edgeplace {

namespace {

// Substream families.
constexpr std::uint64_t kCloudletStream = 0x436c6f75646c6574ULL;  // "Cloudlet"
constexpr std::uint64_t kServiceStream = 0x5365727669636573ULL;   // "Services"
constexpr std::uint64_t kTaskStream = 0x5461736b73546173ULL;      // "TasksTas"

void check_range(const Range& r, const char* name) {
  if (!(r.low > 0.0) || !(r.low <= r.high) || !std::isfinite(r.high)) {
    throw std::invalid_argument(std::string("invalid range for ") + name +
                                ": need 0 < low <= high");
  }
}

}  // namespace

Range GenerationParams::effective_cloudlet_compute() const {
  if (cloudlet_compute) return *cloudlet_compute;
  const double per_cloudlet = 3.0 * num_tasks / num_cloudlets;
  return {per_cloudlet / 4.0, per_cloudlet / 2.0};
}

void GenerationParams::validate() const {
  if (num_tasks < 0) throw std::invalid_argument("num_tasks must be >= 0");
  if (num_services < 1) throw std::invalid_argument("num_services must be >= 1");
  if (num_cloudlets < 1) throw std::invalid_argument("num_cloudlets must be >= 1");
  if (!(beta >= 1.0)) throw std::invalid_argument("beta must be >= 1");
  if (!(qos_factor >= 1.0)) throw std::invalid_argument("qos_factor must be >= 1");
  if (!(grid_size > 0.0)) throw std::invalid_argument("grid_size must be > 0");
  if (!(cloud_distance_multiple > 0.0)) {
    throw std::invalid_argument("cloud_distance_multiple must be > 0");
  }
  if (!(distance_scale > 0.0)) throw std::invalid_argument("distance_scale must be > 0");
  check_range(packet_size, "packet_size");
  check_range(compute_time, "compute_time");
  check_range(cloud_schedule_cost, "cloud_schedule_cost");
  check_range(placement_cost, "placement_cost");
  check_range(storage_demand, "storage_demand");
  check_range(cloudlet_storage, "cloudlet_storage");
  if (cloudlet_compute) check_range(*cloudlet_compute, "cloudlet_compute");
}

Scenario generate(const GenerationParams& params, std::uint64_t seed) {
  params.validate();
  Scenario sc;
  sc.params = params;
  sc.seed = seed;

  const int nc = params.num_cloudlets;
  const auto draw = [&params](RandomStream& rs, Range r) {
    return params.draw_discrete ? rs.endpoint(r) : rs.uniform(r);
  };

  const Range compute_range = params.effective_cloudlet_compute();
  for (int j = 0; j < nc; ++j) {
    RandomStream rs(derive_seed(seed, kCloudletStream, static_cast<std::uint64_t>(j)));
    Node n;
    n.id = j;
    n.kind = NodeKind::kCloudlet;
    const double x = rs.uniform({0.0, params.grid_size});
    const double y = rs.uniform({0.0, params.grid_size});
    n.position = Point{x, y};
    n.storage_capacity = rs.uniform(params.cloudlet_storage);
    n.compute_capacity = rs.uniform(compute_range);
    sc.nodes.push_back(n);
  }
  Node cloud;
  cloud.id = nc;
  cloud.kind = NodeKind::kCloud;
  cloud.storage_capacity = kUnbounded;
  cloud.compute_capacity = kUnbounded;
  sc.nodes.push_back(cloud);

  sc.distances = DistanceMatrix(static_cast<std::size_t>(nc) + 1);
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      const Point& pa = *sc.nodes[static_cast<std::size_t>(a)].position;
      const Point& pb = *sc.nodes[static_cast<std::size_t>(b)].position;
      sc.distances.set(a, b, std::hypot(pa.x - pb.x, pa.y - pb.y) * params.distance_scale);
    }
  }
  const double cloud_distance =
      params.cloud_distance_multiple * (params.grid_size * std::sqrt(2.0)) * params.distance_scale;
  for (int a = 0; a < nc; ++a) sc.distances.set(a, nc, cloud_distance);

  sc.services.reserve(static_cast<std::size_t>(params.num_services));
  for (int m = 0; m < params.num_services; ++m) {
    RandomStream rs(derive_seed(seed, kServiceStream, static_cast<std::uint64_t>(m)));
    Service s;
    s.id = m;
    s.storage_demand = rs.uniform(params.storage_demand);
    s.placement_cost.resize(static_cast<std::size_t>(nc));
    for (double& c : s.placement_cost) c = draw(rs, params.placement_cost);
    const double cloud_cost = draw(rs, params.cloud_schedule_cost);
    s.schedule_cost.resize(static_cast<std::size_t>(nc) + 1);
    const double top = params.beta * cloud_cost;
    for (int j = 0; j < nc; ++j) {
      double c;
      if (params.draw_discrete) {
        c = rs.coin() ? top : cloud_cost;
      } else {
        c = std::min(top, cloud_cost * (1.0 + rs.uniform01() * (params.beta - 1.0)));
      }
      s.schedule_cost[static_cast<std::size_t>(j)] = c;
    }
    s.schedule_cost[static_cast<std::size_t>(nc)] = cloud_cost;
    sc.services.push_back(std::move(s));
  }

  sc.tasks.reserve(static_cast<std::size_t>(params.num_tasks));
  for (int i = 0; i < params.num_tasks; ++i) {
    RandomStream rs(derive_seed(seed, kTaskStream, static_cast<std::uint64_t>(i)));
    Task t;
    t.id = i;
    t.service = static_cast<ServiceId>(rs.index(static_cast<std::size_t>(params.num_services)));
    t.local_node = static_cast<NodeId>(rs.index(static_cast<std::size_t>(nc)));
    t.input_size = draw(rs, params.packet_size);
    t.output_size = draw(rs, params.packet_size);
    t.compute_time = draw(rs, params.compute_time);
    t.qos_deadline = params.qos_factor * t.compute_time;
    sc.tasks.push_back(t);
  }
  return sc;
}

}  // namespace edgeplace
