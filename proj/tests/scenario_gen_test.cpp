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
#include "edgeplace/json_util.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace edgeplace {
namespace {

GenerationParams small_params() {
  GenerationParams p;
  p.num_tasks = 60;
  p.num_services = 25;
  return p;
}

TEST_CASE("generate: default sizes") {
  const Scenario sc = generate(GenerationParams{}, 42);
  CHECK(sc.tasks.size() == 400);
  CHECK(sc.services.size() == 1000);
  CHECK(sc.nodes.size() == 5);
  CHECK(sc.num_cloudlets() == 4);
  CHECK(sc.nodes[4].is_cloud());
  CHECK_NOTHROW(sc.validate());
}

TEST_CASE("generate: same seed gives byte-identical documents") {
  const std::string a = save_scenario(generate(GenerationParams{}, 7));
  const std::string b = save_scenario(generate(GenerationParams{}, 7));
  CHECK(a == b);
  CHECK(a != save_scenario(generate(GenerationParams{}, 8)));
}

TEST_CASE("generate: default cost and deadline structure") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const Scenario sc = generate(GenerationParams{}, seed);
    for (const Service& s : sc.services) {
      const double cloud = s.schedule_cost.back();
      CHECK(Range{2, 4}.contains(cloud));
      CHECK(Range{1, 2}.contains(s.storage_demand));
      for (int j = 0; j < sc.num_cloudlets(); ++j) {
        const double c = s.schedule_cost[static_cast<std::size_t>(j)];
        CHECK(c >= cloud);
        CHECK(c <= 3.0 * cloud);
        CHECK(Range{2, 4}.contains(s.placement_cost[static_cast<std::size_t>(j)]));
      }
    }
    for (const Task& t : sc.tasks) {
      CHECK(t.qos_deadline == 2.5 * t.compute_time);
      CHECK(Range{2, 4}.contains(t.compute_time));
      CHECK(Range{2, 4}.contains(t.input_size));
      CHECK(Range{2, 4}.contains(t.output_size));
      CHECK(t.local_node >= 0);
      CHECK(t.local_node < sc.num_cloudlets());
    }
    const Range compute = sc.params.effective_cloudlet_compute();
    CHECK(compute.low == 75.0);
    CHECK(compute.high == 150.0);
    for (int j = 0; j < sc.num_cloudlets(); ++j) {
      const Node& n = sc.nodes[static_cast<std::size_t>(j)];
      CHECK(compute.contains(n.compute_capacity));
      CHECK(Range{10, 20}.contains(n.storage_capacity));
      CHECK(n.position->x >= 0.0);
      CHECK(n.position->x <= 100.0);
      CHECK(n.position->y >= 0.0);
      CHECK(n.position->y <= 100.0);
    }
  }
}

TEST_CASE("generate: distance matrix invariants and constant cloud row") {
  const Scenario sc = generate(small_params(), 5);
  const double cloud = 5.0 * 100.0 * std::sqrt(2.0) * 0.001;
  for (int a = 0; a < sc.num_nodes(); ++a) {
    CHECK(sc.distances(a, a) == 0.0);
    for (int b = 0; b < sc.num_nodes(); ++b) CHECK(sc.distances(a, b) == sc.distances(b, a));
  }
  for (int a = 0; a < sc.num_cloudlets(); ++a) {
    CHECK(sc.distances(a, sc.cloud()) == doctest::Approx(cloud));
    CHECK(sc.distances(a, sc.cloud()) == sc.distances(0, sc.cloud()));
    for (int b = 0; b < sc.num_cloudlets(); ++b) {
      const Point& pa = *sc.nodes[static_cast<std::size_t>(a)].position;
      const Point& pb = *sc.nodes[static_cast<std::size_t>(b)].position;
      CHECK(sc.distances(a, b) == doctest::Approx(std::hypot(pa.x - pb.x, pa.y - pb.y) * 0.001));
    }
  }
}

TEST_CASE("generate: discrete draws hit only the endpoints") {
  GenerationParams p = small_params();
  p.draw_discrete = true;
  const Scenario sc = generate(p, 13);
  const auto endpoint = [](double v) { return v == 2.0 || v == 4.0; };
  for (const Task& t : sc.tasks) {
    CHECK(endpoint(t.compute_time));
    CHECK(endpoint(t.input_size));
    CHECK(endpoint(t.output_size));
  }
  for (const Service& s : sc.services) {
    const double cloud = s.schedule_cost.back();
    CHECK(endpoint(cloud));
    for (int j = 0; j < sc.num_cloudlets(); ++j) {
      const double c = s.schedule_cost[static_cast<std::size_t>(j)];
      CHECK((c == cloud || c == 3.0 * cloud));
      CHECK(endpoint(s.placement_cost[static_cast<std::size_t>(j)]));
    }
  }
}

TEST_CASE("generate: substreams keep earlier entities stable") {
  GenerationParams p = small_params();
  const Scenario base = generate(p, 21);
  p.num_tasks = 90;
  const Scenario more_tasks = generate(p, 21);
  for (std::size_t i = 0; i < base.tasks.size(); ++i) CHECK(base.tasks[i] == more_tasks.tasks[i]);
  CHECK(base.services == more_tasks.services);
  CHECK(base.distances == more_tasks.distances);

  p = small_params();
  p.num_services = 40;
  const Scenario more_services = generate(p, 21);
  for (std::size_t m = 0; m < base.services.size(); ++m) {
    CHECK(base.services[m] == more_services.services[m]);
  }
}

TEST_CASE("generate: invalid params") {
  GenerationParams p;
  p.beta = 0.5;
  CHECK_THROWS_AS(generate(p, 1), std::invalid_argument);
  p = GenerationParams{};
  p.qos_factor = 0.9;
  CHECK_THROWS_AS(generate(p, 1), std::invalid_argument);
  p = GenerationParams{};
  p.packet_size = {4, 2};
  CHECK_THROWS_AS(generate(p, 1), std::invalid_argument);
  p = GenerationParams{};
  p.placement_cost = {0, 2};
  CHECK_THROWS_AS(generate(p, 1), std::invalid_argument);
}

TEST_CASE("scenario document round trip") {
  GenerationParams p = small_params();
  p.cloudlet_compute = Range{5.5, 7.25};
  p.draw_discrete = true;
  const Scenario sc = generate(p, 0xdeadbeefcafeULL);
  const Scenario back = load_scenario(save_scenario(sc));
  CHECK(back == sc);
  CHECK(save_scenario(back) == save_scenario(sc));

  const Scenario def = generate(GenerationParams{}, 77);
  CHECK(load_scenario(save_scenario(def)) == def);
}

TEST_CASE("scenario document errors") {
  const Scenario sc = generate(small_params(), 3);
  auto doc = nlohmann::json::parse(save_scenario(sc));

  auto missing = doc;
  missing.erase("distances");
  try {
    load_scenario(missing.dump());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("distances") != std::string::npos);
  }

  auto asymmetric = doc;
  asymmetric["distances"][0][1] = 0.5;
  CHECK_THROWS_AS(load_scenario(asymmetric.dump()), ScenarioError);

  auto bad_task = doc;
  bad_task["tasks"][0].erase("qos_deadline");
  try {
    load_scenario(bad_task.dump());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("qos_deadline") != std::string::npos);
  }

  auto bad_costs = doc;
  bad_costs["services"][0]["schedule_cost"].erase("4");
  CHECK_THROWS_AS(load_scenario(bad_costs.dump()), ParseError);

  CHECK_THROWS_AS(load_scenario("{not json"), ParseError);
}

TEST_CASE("params document: partial override keeps defaults") {
  const GenerationParams p = load_params(R"({"num_tasks": 40, "beta": 2, "packet_size_range": [1, 3]})");
  CHECK(p.num_tasks == 40);
  CHECK(p.beta == 2.0);
  CHECK(p.packet_size == Range{1, 3});
  CHECK(p.num_services == 1000);
  CHECK_FALSE(p.cloudlet_compute.has_value());
  CHECK(load_params(save_params(p)) == p);
  CHECK_THROWS_AS(load_params(R"({"packet_size_range": 3})"), ParseError);
}

}  // namespace
}  // namespace edgeplace
