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

#ifndef EDGEPLACE_TESTS_SUPPORT_HPP_
#define EDGEPLACE_TESTS_SUPPORT_HPP_

// Hand-built and randomly generated instances shared by the test suites.

#include <cstdint>
#include <vector>

#include "edgeplace/model.hpp"
#include "edgeplace/rng.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace edgeplace::testing {

// Builds small scenarios by hand. Cloudlets get ids 0..n-1, the cloud is n.
// All cloudlet pairs sit at `cloudlet_distance`, the cloud at `cloud_distance`.
class ScenarioBuilder {
 public:
  ScenarioBuilder(int num_cloudlets, double storage, double compute, double cloudlet_distance = 0.1,
                  double cloud_distance = 0.5) {
    for (int j = 0; j < num_cloudlets; ++j) {
      sc_.nodes.push_back({j, NodeKind::kCloudlet, Point{double(j), 0.0}, storage, compute});
    }
    sc_.nodes.push_back({num_cloudlets, NodeKind::kCloud, std::nullopt, kUnbounded, kUnbounded});
    sc_.distances = DistanceMatrix(static_cast<std::size_t>(num_cloudlets) + 1);
    for (int a = 0; a < num_cloudlets; ++a) {
      for (int b = a + 1; b < num_cloudlets; ++b) sc_.distances.set(a, b, cloudlet_distance);
      sc_.distances.set(a, num_cloudlets, cloud_distance);
    }
  }

  ScenarioBuilder& capacity(NodeId j, double storage, double compute) {
    sc_.nodes[static_cast<std::size_t>(j)].storage_capacity = storage;
    sc_.nodes[static_cast<std::size_t>(j)].compute_capacity = compute;
    return *this;
  }

  // placement: one cost per cloudlet; schedule: one per node (cloud last).
  ServiceId service(double storage_demand, std::vector<double> placement,
                    std::vector<double> schedule) {
    const auto id = static_cast<ServiceId>(sc_.services.size());
    sc_.services.push_back({id, storage_demand, std::move(placement), std::move(schedule)});
    return id;
  }

  // Same costs on every node: placement p, cloudlet schedule s, cloud schedule c.
  ServiceId uniform_service(double storage_demand, double p, double s, double c) {
    const int nc = sc_.num_cloudlets();
    std::vector<double> schedule(static_cast<std::size_t>(nc), s);
    schedule.push_back(c);
    return service(storage_demand, std::vector<double>(static_cast<std::size_t>(nc), p), schedule);
  }

  TaskId task(ServiceId s, NodeId local, double sigma, double deadline, double in = 1.0,
              double out = 1.0) {
    const auto id = static_cast<TaskId>(sc_.tasks.size());
    sc_.tasks.push_back({id, s, local, in, out, sigma, deadline});
    return id;
  }

  const Scenario& build() {
    sc_.validate();
    return sc_;
  }

 private:
  Scenario sc_;
};

// Random instance small enough for brute force: up to `max_tasks` tasks,
// 1..4 services, 2 cloudlets + cloud, with binding storage and compute and
// a deadline factor that makes some tasks cloud-infeasible.
inline Scenario random_tiny(std::uint64_t seed, int max_tasks = 6) {
  RandomStream rs(seed);
  GenerationParams p;
  p.num_tasks = static_cast<int>(rs.index(static_cast<std::size_t>(max_tasks) + 1));
  p.num_services = 1 + static_cast<int>(rs.index(4));
  p.num_cloudlets = 2;
  const double factors[] = {1.2, 1.6, 2.5, 4.0};
  p.qos_factor = factors[rs.index(4)];
  p.beta = 1.0 + 3.0 * rs.uniform01();
  p.storage_demand = {1.0, 2.0};
  p.cloudlet_storage = {1.0, 4.0};
  p.cloudlet_compute = Range{2.0, 9.0};
  p.draw_discrete = rs.coin();
  return generate(p, seed);
}

}  // namespace edgeplace::testing

#endif  // EDGEPLACE_TESTS_SUPPORT_HPP_
