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

#include <cmath>

#include "doctest.h"
#include "edgeplace/scenario_gen.hpp"
#include "edgeplace/timing.hpp"
#include "support.hpp"

namespace edgeplace {
namespace {

using testing::ScenarioBuilder;

// Cloud distance under default generation: 5 * (100 * sqrt 2) * 0.001.
const double kDefaultCloudDistance = 5.0 * (100.0 * std::sqrt(2.0)) * 0.001;

Task make_task(double sigma, double deadline, double in, double out, NodeId local = 0) {
  return Task{0, 0, local, in, out, sigma, deadline};
}

DistanceMatrix two_node(double d) { return DistanceMatrix::from_rows({{0, d}, {d, 0}}); }

TEST_CASE("completion_time: local target is exactly the compute time") {
  const Task t = make_task(3, 10, 2, 2);
  CHECK(completion_time(t, 0, two_node(0.7)) == 3.0);
}

TEST_CASE("completion_time: remote target adds transfer both ways") {
  const Task t = make_task(2, 10, 2, 2);
  CHECK(completion_time(t, 1, two_node(0.1)) == doctest::Approx(2.4));
}

TEST_CASE("completion_time: default cloud distance") {
  // Hand computation: 4 + 0.70710678 * (4 + 4) = 9.65685425.
  CHECK(kDefaultCloudDistance == doctest::Approx(0.70710678118654757));
  const Task t = make_task(4, 10, 4, 4);
  CHECK(completion_time(t, 1, two_node(kDefaultCloudDistance)) ==
        doctest::Approx(9.6568542494923806));
}

TEST_CASE("completion_time: unknown node") {
  const Task t = make_task(2, 5, 2, 2);
  CHECK_THROWS_AS(completion_time(t, 2, two_node(0.1)), UnknownIdError);
  CHECK_THROWS_AS(is_feasible(t, -1, two_node(0.1)), UnknownIdError);
}

TEST_CASE("is_feasible against the default cloud") {
  const DistanceMatrix d = two_node(kDefaultCloudDistance);
  CHECK(is_feasible(make_task(3, 3, 2, 2), 0, d));
  // 2 + 0.7071 * 4 = 4.8284 <= 5
  CHECK(completion_time(make_task(2, 5, 2, 2), 1, d) == doctest::Approx(4.828427124746190));
  CHECK(is_feasible(make_task(2, 5, 2, 2), 1, d));
  // 2 + 0.7071 * 8 = 7.6569 > 5
  CHECK(completion_time(make_task(2, 5, 4, 4), 1, d) == doctest::Approx(7.656854249492381));
  CHECK_FALSE(is_feasible(make_task(2, 5, 4, 4), 1, d));
}

TEST_CASE("is_feasible: deadline equality is feasible") {
  // 0.5 * 1 + 2 + 0.5 * 1 = 3 exactly in binary.
  CHECK(is_feasible(make_task(2, 3, 1, 1), 1, two_node(0.5)));
  CHECK_FALSE(is_feasible(make_task(2, 2.9999999, 1, 1), 1, two_node(0.5)));
}

TEST_CASE("feasible_targets ordering and boundaries") {
  ScenarioBuilder b(3, 10, 10, 0.1, 0.5);
  const ServiceId s = b.uniform_service(1, 2, 3, 2);
  b.task(s, 1, 2, 2);      // deadline == sigma
  b.task(s, 1, 2, 1e9);    // effectively unbounded deadline
  const Scenario& sc = b.build();
  CHECK(feasible_targets(sc.tasks[0], sc) == std::vector<NodeId>{1});
  // Local first, then the two equidistant cloudlets by id, then the cloud.
  CHECK(feasible_targets(sc.tasks[1], sc) == std::vector<NodeId>{1, 0, 2, 3});
}

TEST_CASE("feasible_targets excludes the default cloud for a tight task") {
  GenerationParams p;
  p.num_tasks = 1;
  p.num_services = 1;
  Scenario sc = generate(p, 3);
  sc.tasks[0].compute_time = 2;
  sc.tasks[0].qos_deadline = 5;
  sc.tasks[0].input_size = 4;
  sc.tasks[0].output_size = 4;
  const auto targets = feasible_targets(sc.tasks[0], sc);
  CHECK(targets.size() == 4);
  CHECK(targets.front() == sc.tasks[0].local_node);
  CHECK(std::find(targets.begin(), targets.end(), sc.cloud()) == targets.end());
}

TEST_CASE("timing properties on generated tasks") {
  GenerationParams p;
  p.num_tasks = 200;
  p.num_services = 10;
  const Scenario sc = generate(p, 11);
  for (const Task& t : sc.tasks) {
    CHECK(completion_time(t, t.local_node, sc.distances) == t.compute_time);
    const auto targets = feasible_targets(t, sc);
    REQUIRE_FALSE(targets.empty());
    CHECK(targets.front() == t.local_node);
    for (NodeId j = 0; j < sc.num_nodes(); ++j) {
      const double base = completion_time(t, j, sc.distances);
      Task bigger = t;
      bigger.input_size += 0.5;
      CHECK(completion_time(bigger, j, sc.distances) >= base);
      bigger = t;
      bigger.output_size += 0.5;
      CHECK(completion_time(bigger, j, sc.distances) >= base);
      bigger = t;
      bigger.compute_time += 0.5;
      CHECK(completion_time(bigger, j, sc.distances) >= base);
      DistanceMatrix farther = sc.distances;
      if (j != t.local_node) {
        farther.set(t.local_node, j, sc.distances(t.local_node, j) * 1.5);
        CHECK(completion_time(t, j, farther) >= base);
      }
    }
  }
}

}  // namespace
}  // namespace edgeplace
