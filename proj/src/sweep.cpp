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

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "edgeplace/experiment.hpp"
#include "edgeplace/json_util.hpp"
#include "edgeplace/rng.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace edgeplace {

using nlohmann::json;

const char* to_string(SweptParam p) {
  switch (p) {
    case SweptParam::kNumTasks:
      return "num_tasks";
    case SweptParam::kQosFactor:
      return "qos_factor";
    case SweptParam::kBeta:
      return "beta";
  }
  return "unknown";
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kExactQosLess:
      return "exact_qos_less";
    case Algorithm::kLocal:
      return "local";
    case Algorithm::kGlobal:
      return "global";
  }
  return "unknown";
}

SweptParam parse_swept_param(const std::string& name) {
  for (SweptParam p : {SweptParam::kNumTasks, SweptParam::kQosFactor, SweptParam::kBeta}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown swept parameter \"" + name + "\"");
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kExact, Algorithm::kExactQosLess, Algorithm::kLocal,
                      Algorithm::kGlobal}) {
    if (name == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

GenerationParams apply_swept_value(const GenerationParams& base, SweptParam swept, double value) {
  GenerationParams p = base;
  switch (swept) {
    case SweptParam::kNumTasks:
      p.num_tasks = static_cast<int>(std::lround(value));
      break;
    case SweptParam::kQosFactor:
      p.qos_factor = value;
      break;
    case SweptParam::kBeta:
      p.beta = value;
      break;
  }
  return p;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      throw std::invalid_argument("sweep values must be strictly increasing");
    }
  }
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("sweep needs at least one algorithm");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (node_limit && *node_limit <= 0) throw std::invalid_argument("node_limit must be positive");
  if (time_limit && time_limit->count() <= 0) {
    throw std::invalid_argument("time_limit_ms must be positive");
  }
  for (double v : values) apply_swept_value(base, swept, v).validate();
}

SweepSpec load_sweep_spec(const std::string& document) {
  const json doc = json_util::parse(document);
  SweepSpec spec;
  spec.swept = parse_swept_param(json_util::get<std::string>(doc, "swept"));
  spec.values = json_util::get<std::vector<double>>(doc, "values");
  json_util::read_optional(doc, "replications", spec.replications);
  json_util::read_optional(doc, "seed_base", spec.seed_base);
  json_util::read_optional(doc, "workers", spec.workers);
  if (doc.contains("base")) spec.base = load_params(doc.at("base").dump());
  if (doc.contains("algorithms")) {
    spec.algorithms.clear();
    for (const auto& name : json_util::get<std::vector<std::string>>(doc, "algorithms")) {
      spec.algorithms.push_back(parse_algorithm(name));
    }
  }
  if (doc.contains("node_limit") && !doc.at("node_limit").is_null()) {
    spec.node_limit = json_util::get<std::int64_t>(doc, "node_limit");
  }
  if (doc.contains("time_limit_ms") && !doc.at("time_limit_ms").is_null()) {
    spec.time_limit = std::chrono::milliseconds(json_util::get<std::int64_t>(doc, "time_limit_ms"));
  }
  json_util::read_optional(doc, "cloud_profit_divisor", spec.global_options.cloud_profit_divisor);
  json_util::read_optional(doc, "reuse_is_free", spec.global_options.reuse_is_free);
  spec.validate();
  return spec;
}

std::string save_sweep_spec(const SweepSpec& spec) {
  json doc;
  doc["swept"] = to_string(spec.swept);
  doc["values"] = spec.values;
  doc["replications"] = spec.replications;
  doc["seed_base"] = spec.seed_base;
  doc["workers"] = spec.workers;
  doc["base"] = json::parse(save_params(spec.base));
  json algs = json::array();
  for (Algorithm a : spec.algorithms) algs.push_back(to_string(a));
  doc["algorithms"] = std::move(algs);
  doc["node_limit"] = spec.node_limit ? json(*spec.node_limit) : json(nullptr);
  doc["time_limit_ms"] = spec.time_limit ? json(spec.time_limit->count()) : json(nullptr);
  doc["cloud_profit_divisor"] = spec.global_options.cloud_profit_divisor;
  doc["reuse_is_free"] = spec.global_options.reuse_is_free;
  return doc.dump(2);
}

std::uint64_t row_seed(std::uint64_t seed_base, std::size_t value_index, int replication) {
  constexpr std::uint64_t kSweepTag = 0x5377656570526f77ULL;  // "SweepRow"
  return derive_seed(seed_base ^ kSweepTag, static_cast<std::uint64_t>(value_index),
                     static_cast<std::uint64_t>(replication));
}

std::uint64_t scenario_hash(const Scenario& scenario) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : save_scenario(scenario)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool row_succeeded(const SweepRow& row) {
  return row.status == "optimal" || row.status == "complete" || row.status == "partial";
}

SweepRow run_algorithm(const Scenario& scenario, Algorithm algorithm, const SweepSpec& spec) {
  SweepRow row;
  row.algorithm = to_string(algorithm);
  const double nan = std::nan("");
  const auto start = std::chrono::steady_clock::now();
  std::optional<CostReport> report;

  if (algorithm == Algorithm::kExact || algorithm == Algorithm::kExactQosLess) {
    SolveOptions opt;
    opt.mode = algorithm == Algorithm::kExact ? QosMode::kAware : QosMode::kLess;
    opt.node_limit = spec.node_limit;
    opt.time_limit = spec.time_limit;
    SolveOutcome outcome = solve(scenario, opt);
    row.status = to_string(outcome.status);
    report = std::move(outcome.report);
  } else {
    const Assignment a = algorithm == Algorithm::kLocal
                             ? local_serving(scenario)
                             : global_serving(scenario, spec.global_options);
    row.status = a.unserved.empty() ? "complete" : "partial";
    report = evaluate_objective(scenario, a);
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  row.runtime_ms = elapsed.count();

  if (report) {
    row.objective_total = report->total;
    row.placement_cost = report->placement_cost;
    row.scheduling_cost = report->scheduling_cost;
    row.drop_fraction = report->drop_fraction;
  } else {
    row.objective_total = row.placement_cost = row.scheduling_cost = row.drop_fraction = nan;
  }
  return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t num_algs = spec.algorithms.size();
  const auto reps = static_cast<std::size_t>(spec.replications);
  const std::size_t num_jobs = spec.values.size() * reps;

  SweepResult result;
  result.rows.resize(num_jobs * num_algs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    while (true) {
      const std::size_t job = next.fetch_add(1);
      if (job >= num_jobs) return;
      try {
        const std::size_t vi = job / reps;
        const int rep = static_cast<int>(job % reps);
        const double value = spec.values[vi];
        const std::uint64_t seed = row_seed(spec.seed_base, vi, rep);
        const Scenario sc = generate(apply_swept_value(spec.base, spec.swept, value), seed);
        const std::uint64_t hash = scenario_hash(sc);
        for (std::size_t a = 0; a < num_algs; ++a) {
          SweepRow row = run_algorithm(sc, spec.algorithms[a], spec);
          row.swept_param = to_string(spec.swept);
          row.swept_value = value;
          row.replication = rep;
          row.seed = seed;
          row.scenario_hash = hash;
          result.rows[job * num_algs + a] = std::move(row);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(num_jobs);
        return;
      }
    }
  };

  const auto width = std::min<std::size_t>(static_cast<std::size_t>(spec.workers), num_jobs);
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::vector<SummaryRow> summarize(const SweepResult& result, const SummaryOptions& options) {
  // Replications (value, replication) in which some algorithm failed.
  std::set<std::pair<double, int>> broken;
  if (options.paired) {
    for (const SweepRow& r : result.rows) {
      if (!row_succeeded(r)) broken.emplace(r.swept_value, r.replication);
    }
  }

  std::vector<SummaryRow> out;
  std::vector<double> objective_sum, drop_sum, runtime_sum;
  const auto find = [&](double value, const std::string& alg) -> std::size_t {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].swept_value == value && out[i].algorithm == alg) return i;
    }
    out.push_back({value, alg, 0.0, 0.0, 0.0, 0, 0});
    objective_sum.push_back(0.0);
    drop_sum.push_back(0.0);
    runtime_sum.push_back(0.0);
    return out.size() - 1;
  };

  for (const SweepRow& r : result.rows) {
    const std::size_t i = find(r.swept_value, r.algorithm);
    if (!row_succeeded(r) || broken.contains({r.swept_value, r.replication})) {
      ++out[i].excluded;
      continue;
    }
    ++out[i].included;
    objective_sum[i] += r.objective_total;
    drop_sum[i] += r.drop_fraction;
    runtime_sum[i] += r.runtime_ms;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double n = out[i].included;
    const double nan = std::nan("");
    out[i].mean_objective = n > 0 ? objective_sum[i] / n : nan;
    out[i].mean_drop_fraction = n > 0 ? drop_sum[i] / n : nan;
    out[i].mean_runtime_ms = n > 0 ? runtime_sum[i] / n : nan;
  }
  return out;
}

}  // namespace edgeplace
