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

#ifndef EDGEPLACE_EXPERIMENT_HPP_
#define EDGEPLACE_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgeplace/exact.hpp"
#include "edgeplace/generation_params.hpp"
#include "edgeplace/heuristics.hpp"

namespace edgeplace {

enum class SweptParam { kNumTasks, kQosFactor, kBeta };
enum class Algorithm { kExact, kExactQosLess, kLocal, kGlobal };

const char* to_string(SweptParam p);
const char* to_string(Algorithm a);
SweptParam parse_swept_param(const std::string& name);
Algorithm parse_algorithm(const std::string& name);

// Copy of `base` with the swept field set to `value` (rounded for num_tasks).
GenerationParams apply_swept_value(const GenerationParams& base, SweptParam swept, double value);

struct SweepSpec {
  SweptParam swept = SweptParam::kNumTasks;
  std::vector<double> values;
  int replications = 20;
  GenerationParams base;
  std::vector<Algorithm> algorithms{Algorithm::kExact, Algorithm::kLocal, Algorithm::kGlobal};
  std::uint64_t seed_base = 1;
  // Limits for the exact algorithms; node limits keep sweeps reproducible.
  std::optional<std::int64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  GlobalServingOptions global_options;
  int workers = 1;

  // Throws std::invalid_argument.
  void validate() const;
};

// Sweep spec document: keys mirror the SweepSpec fields, "base" uses the
// GenerationParams document syntax.
SweepSpec load_sweep_spec(const std::string& document);
std::string save_sweep_spec(const SweepSpec& spec);

// splitmix64-based mix of (seed_base, value index, replication).
std::uint64_t row_seed(std::uint64_t seed_base, std::size_t value_index, int replication);

// FNV-1a over the serialized scenario; used to check pairing.
std::uint64_t scenario_hash(const Scenario& scenario);

struct SweepRow {
  std::string swept_param;
  double swept_value = 0.0;
  int replication = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  // optimal / infeasible / limit_reached for the exact solver, complete /
  // partial for heuristics (partial: some tasks left unserved).
  std::string status;
  double objective_total = 0.0;
  double placement_cost = 0.0;
  double scheduling_cost = 0.0;
  double drop_fraction = 0.0;
  double runtime_ms = 0.0;
  // Not part of the CSV.
  std::uint64_t scenario_hash = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// Rows ordered by (value index, replication, algorithm order in the spec)
// regardless of worker count.
SweepResult run_sweep(const SweepSpec& spec);

// One row for a single (scenario, algorithm) run.
SweepRow run_algorithm(const Scenario& scenario, Algorithm algorithm, const SweepSpec& spec);

// Heuristic rows always count; their drops show up in drop_fraction.
bool row_succeeded(const SweepRow& row);

struct SummaryRow {
  double swept_value = 0.0;
  std::string algorithm;
  double mean_objective = 0.0;
  double mean_drop_fraction = 0.0;
  double mean_runtime_ms = 0.0;
  int included = 0;
  int excluded = 0;
};

struct SummaryOptions {
  // Keep only replications in which every algorithm succeeded, so all
  // means are taken over the same scenarios.
  bool paired = false;
};

// Means per (value, algorithm) over successful rows (see row_succeeded).
// Ordered by first appearance of value, then algorithm.
std::vector<SummaryRow> summarize(const SweepResult& result, const SummaryOptions& options = {});

inline constexpr const char* kCsvHeader =
    "swept_param,swept_value,replication,seed,algorithm,status,objective_total,"
    "placement_cost,scheduling_cost,drop_fraction,runtime_ms";

void write_csv(const SweepResult& result, std::ostream& out);
// Throws ParseError on a bad header or malformed row.
SweepResult read_csv(std::istream& in);
void write_summary_csv(const std::vector<SummaryRow>& summary, std::ostream& out);

enum class PlotMetric { kObjective, kDropFraction };
// One polyline per algorithm over the swept values.
void write_svg(const std::vector<SummaryRow>& summary, const std::string& swept_param,
               PlotMetric metric, std::ostream& out);

}  // namespace edgeplace

#endif  // EDGEPLACE_EXPERIMENT_HPP_
