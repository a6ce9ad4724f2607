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
#include <set>
#include <sstream>

#include "doctest.h"
#include "edgeplace/experiment.hpp"
#include "edgeplace/heuristics.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace edgeplace {
namespace {

SweepRow make_row(double value, int rep, const std::string& alg, const std::string& status,
                  double objective) {
  SweepRow r;
  r.swept_param = "num_tasks";
  r.swept_value = value;
  r.replication = rep;
  r.seed = 7;
  r.algorithm = alg;
  r.status = status;
  r.objective_total = objective;
  r.placement_cost = objective / 2;
  r.scheduling_cost = objective / 2;
  r.runtime_ms = 1.0;
  return r;
}

std::string csv_without_runtime(const SweepResult& result) {
  std::ostringstream os;
  write_csv(result, os);
  std::istringstream in(os.str());
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST_CASE("sweep: users grid yields one row per value, replication and algorithm") {
  SweepSpec spec;
  spec.swept = SweptParam::kNumTasks;
  for (int t = 300; t <= 500; t += 25) spec.values.push_back(t);
  spec.replications = 20;
  spec.base.num_services = 50;
  spec.algorithms = {Algorithm::kExactQosLess, Algorithm::kLocal, Algorithm::kGlobal};
  spec.node_limit = 200;
  const SweepResult r = run_sweep(spec);
  CHECK(spec.values.size() == 9);
  REQUIRE(r.rows.size() == 540);
  std::size_t i = 0;
  for (std::size_t v = 0; v < spec.values.size(); ++v) {
    for (int rep = 0; rep < 20; ++rep) {
      for (Algorithm a : spec.algorithms) {
        const SweepRow& row = r.rows[i++];
        CHECK(row.swept_value == spec.values[v]);
        CHECK(row.replication == rep);
        CHECK(row.algorithm == to_string(a));
        CHECK(row.seed == row_seed(spec.seed_base, v, rep));
      }
    }
  }
}

TEST_CASE("sweep: all algorithms of a replication see the same scenario") {
  SweepSpec spec;
  spec.swept = SweptParam::kBeta;
  spec.values = {1, 3};
  spec.replications = 4;
  spec.base.num_tasks = 12;
  spec.base.num_services = 6;
  spec.algorithms = {Algorithm::kExact, Algorithm::kExactQosLess, Algorithm::kLocal, Algorithm::kGlobal};
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 2 * 4 * 4);
  std::set<std::uint64_t> distinct;
  for (std::size_t i = 0; i < r.rows.size(); i += 4) {
    for (std::size_t k = 1; k < 4; ++k) CHECK(r.rows[i + k].scenario_hash == r.rows[i].scenario_hash);
    distinct.insert(r.rows[i].scenario_hash);
  }
  CHECK(distinct.size() == 8);
}

TEST_CASE("sweep: qos grid has six values") {
  SweepSpec spec;
  spec.swept = SweptParam::kQosFactor;
  for (double q = 2.5; q <= 5.0 + 1e-9; q += 0.5) spec.values.push_back(q);
  spec.replications = 1;
  spec.base.num_tasks = 10;
  spec.base.num_services = 5;
  spec.algorithms = {Algorithm::kGlobal};
  CHECK(spec.values.size() == 6);
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.rows.back().swept_value == doctest::Approx(5.0));
  CHECK(r.rows.front().swept_param == "qos_factor");
}

TEST_CASE("sweep: a single local row matches calling local_serving directly") {
  SweepSpec spec;
  spec.swept = SweptParam::kNumTasks;
  spec.values = {30};
  spec.replications = 1;
  spec.base.num_services = 20;
  spec.algorithms = {Algorithm::kLocal};
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 1);
  const SweepRow& row = r.rows[0];
  const Scenario sc = generate(apply_swept_value(spec.base, spec.swept, 30), row.seed);
  const CostReport direct = evaluate_objective(sc, local_serving(sc));
  CHECK(row.objective_total == direct.total);
  CHECK(row.placement_cost == direct.placement_cost);
  CHECK(row.scheduling_cost == direct.scheduling_cost);
  CHECK(row.drop_fraction == direct.drop_fraction);
  CHECK(row.scenario_hash == scenario_hash(sc));
}

TEST_CASE("sweep: results do not depend on worker count") {
  SweepSpec spec;
  spec.swept = SweptParam::kQosFactor;
  spec.values = {2.5, 4.0};
  spec.replications = 3;
  spec.base.num_tasks = 14;
  spec.base.num_services = 8;
  spec.algorithms = {Algorithm::kExact, Algorithm::kLocal, Algorithm::kGlobal};
  spec.node_limit = 100000;
  const SweepResult one = run_sweep(spec);
  spec.workers = 4;
  const SweepResult four = run_sweep(spec);
  CHECK(csv_without_runtime(one) == csv_without_runtime(four));
  spec.workers = 1;
  CHECK(csv_without_runtime(one) == csv_without_runtime(run_sweep(spec)));
}

TEST_CASE("row_seed: fixed values and independence of other values") {
  CHECK(row_seed(1, 0, 0) == 18336661155710146503ULL);
  CHECK(row_seed(1, 3, 7) == 311701573117865189ULL);
  CHECK(row_seed(42, 8, 19) == 14872381592611849242ULL);
  CHECK(row_seed(1, 0, 1) != row_seed(1, 1, 0));

  // Appending a value keeps the scenarios of existing rows.
  SweepSpec spec;
  spec.swept = SweptParam::kBeta;
  spec.values = {2};
  spec.replications = 2;
  spec.base.num_tasks = 8;
  spec.base.num_services = 4;
  spec.algorithms = {Algorithm::kLocal};
  const SweepResult a = run_sweep(spec);
  spec.values = {2, 4};
  spec.replications = 3;
  const SweepResult b = run_sweep(spec);
  CHECK(b.rows[0].scenario_hash == a.rows[0].scenario_hash);
  CHECK(b.rows[1].scenario_hash == a.rows[1].scenario_hash);
}

TEST_CASE("sweep spec: validation") {
  SweepSpec spec;
  spec.values = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.values = {30, 30};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.values = {40, 30};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.values = {30, 40};
  spec.replications = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.replications = 1;
  CHECK_NOTHROW(spec.validate());
  spec.swept = SweptParam::kBeta;
  spec.values = {0.5};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("sweep spec: document round trip") {
  SweepSpec spec;
  spec.swept = SweptParam::kQosFactor;
  spec.values = {2.5, 3.0};
  spec.replications = 5;
  spec.seed_base = 99;
  spec.base.num_tasks = 33;
  spec.base.draw_discrete = true;
  spec.algorithms = {Algorithm::kGlobal, Algorithm::kExact};
  spec.node_limit = 1234;
  spec.global_options.reuse_is_free = true;
  const SweepSpec back = load_sweep_spec(save_sweep_spec(spec));
  CHECK(back.swept == spec.swept);
  CHECK(back.values == spec.values);
  CHECK(back.replications == 5);
  CHECK(back.seed_base == 99);
  CHECK(back.base == spec.base);
  CHECK(back.algorithms == spec.algorithms);
  CHECK(back.node_limit == spec.node_limit);
  CHECK(!back.time_limit);
  CHECK(back.global_options.reuse_is_free);

  const SweepSpec minimal = load_sweep_spec(R"({"swept": "beta", "values": [1, 2]})");
  CHECK(minimal.replications == 20);
  CHECK(minimal.algorithms.size() == 3);
  CHECK_THROWS_AS(load_sweep_spec(R"({"values": [1, 2]})"), ParseError);
  CHECK_THROWS(load_sweep_spec(R"({"swept": "gamma", "values": [1]})"));
}

TEST_CASE("summarize: means and exclusions") {
  SweepResult r;
  for (int i = 0; i < 20; ++i) r.rows.push_back(make_row(30, i, "global", "complete", 10));
  r.rows.push_back(make_row(35, 0, "global", "complete", 8));
  r.rows.push_back(make_row(35, 1, "global", "partial", 12));
  r.rows.push_back(make_row(35, 0, "exact", "optimal", 7));
  r.rows.push_back(make_row(35, 1, "exact", "infeasible", 0));
  const auto s = summarize(r);
  REQUIRE(s.size() == 3);
  CHECK(s[0].swept_value == 30);
  CHECK(s[0].mean_objective == 10);
  CHECK(s[0].included == 20);
  CHECK(s[1].algorithm == "global");
  CHECK(s[1].mean_objective == 10);
  CHECK(s[2].algorithm == "exact");
  CHECK(s[2].mean_objective == 7);
  CHECK(s[2].included == 1);
  CHECK(s[2].excluded == 1);

  const auto paired = summarize(r, {.paired = true});
  REQUIRE(paired.size() == 3);
  CHECK(paired[1].mean_objective == 8);
  CHECK(paired[1].excluded == 1);
  CHECK(paired[2].mean_objective == 7);
}

TEST_CASE("summarize: pointwise ordering survives the mean") {
  SweepResult r;
  for (int i = 0; i < 10; ++i) {
    const double base = 5.0 + i * 1.5;
    r.rows.push_back(make_row(1, i, "exact", "optimal", base));
    r.rows.push_back(make_row(1, i, "global", "complete", base + (i % 3)));
    r.rows.push_back(make_row(1, i, "local", "complete", base + (i % 3) + 0.25 * i));
  }
  const auto s = summarize(r);
  REQUIRE(s.size() == 3);
  CHECK(s[0].mean_objective <= s[1].mean_objective);
  CHECK(s[1].mean_objective <= s[2].mean_objective);
}

TEST_CASE("csv: header only for an empty result") {
  std::ostringstream os;
  write_csv(SweepResult{}, os);
  CHECK(os.str() ==
        "swept_param,swept_value,replication,seed,algorithm,status,objective_total,"
        "placement_cost,scheduling_cost,drop_fraction,runtime_ms\n");
}

TEST_CASE("csv: round trip keeps every field") {
  SweepResult r;
  r.rows.push_back(make_row(0.1 + 0.2, 3, "exact", "optimal", 1.0 / 3.0));
  r.rows.back().seed = 0xffffffffffffffffULL;
  r.rows.back().drop_fraction = 0.125;
  SweepRow missing = make_row(2.5, 0, "exact", "infeasible", 0);
  missing.objective_total = missing.placement_cost = missing.scheduling_cost = missing.drop_fraction =
      std::nan("");
  r.rows.push_back(missing);
  std::ostringstream os;
  write_csv(r, os);
  std::istringstream in(os.str());
  const SweepResult back = read_csv(in);
  REQUIRE(back.rows.size() == 2);
  const SweepRow& a = back.rows[0];
  CHECK(a.swept_param == "num_tasks");
  CHECK(a.swept_value == 0.1 + 0.2);
  CHECK(a.replication == 3);
  CHECK(a.seed == 0xffffffffffffffffULL);
  CHECK(a.algorithm == "exact");
  CHECK(a.status == "optimal");
  CHECK(a.objective_total == 1.0 / 3.0);
  CHECK(a.drop_fraction == 0.125);
  CHECK(std::isnan(back.rows[1].objective_total));
  CHECK(back.rows[1].status == "infeasible");

  std::istringstream bad("swept,value\n");
  CHECK_THROWS_AS(read_csv(bad), ParseError);
}

TEST_CASE("svg: one polyline per algorithm") {
  SweepResult r;
  for (double v : {30.0, 35.0, 40.0}) {
    r.rows.push_back(make_row(v, 0, "exact", "optimal", v));
    r.rows.push_back(make_row(v, 0, "global", "complete", v + 1));
    r.rows.push_back(make_row(v, 0, "local", "complete", v + 2));
  }
  std::ostringstream os;
  write_svg(summarize(r), "num_tasks", PlotMetric::kObjective, os);
  const std::string svg = os.str();
  std::size_t count = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
    ++count;
  }
  CHECK(count == 3);
  CHECK(svg.find("num_tasks") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

}  // namespace
}  // namespace edgeplace
