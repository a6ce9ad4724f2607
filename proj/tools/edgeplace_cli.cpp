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


// Command-line front end: gen, solve, validate, oracle, export-milp, sweep
// and summarize. Exit codes: 0 success, 1 usage or input error,
// 2 infeasible or validation failure, 3 solver limit reached.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgeplace/assignment_io.hpp"
#include "edgeplace/exact.hpp"
#include "edgeplace/experiment.hpp"
#include "edgeplace/heuristics.hpp"
#include "edgeplace/milp.hpp"
#include "edgeplace/scenario_gen.hpp"

namespace {

using namespace edgeplace;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitLimit = 3;

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    if (!contents.empty() && contents.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(path, contents);
  }
}

QosMode parse_mode(const std::string& name) {
  return name == "qos_less" ? QosMode::kLess : QosMode::kAware;
}

void print_report(std::ostream& os, const CostReport& r, std::size_t num_tasks) {
  os << "placement cost   " << r.placement_cost << "\n"
     << "scheduling cost  " << r.scheduling_cost << "\n"
     << "total            " << r.total << "\n"
     << "dropped          " << r.drop_count << " of " << num_tasks << " (" << r.drop_fraction << ")\n";
}

struct Options {
  std::string params;
  std::uint64_t seed = 1;
  std::string out;
  std::string scenario;
  std::string assignment;
  std::string alg = "exact";
  std::string mode = "qos_aware";
  std::optional<std::int64_t> node_limit;
  std::optional<std::int64_t> time_limit_ms;
  std::vector<int> constraints;
  std::string format = "csv";
  std::string metric = "objective";
  std::optional<int> workers;
  std::string summary;
  std::string csv;
  bool paired = false;
};

SolveOptions solve_options(const Options& o) {
  SolveOptions opt;
  opt.mode = parse_mode(o.mode);
  opt.node_limit = o.node_limit;
  if (o.time_limit_ms) opt.time_limit = std::chrono::milliseconds(*o.time_limit_ms);
  return opt;
}

int run_gen(const Options& o) {
  const GenerationParams params = o.params.empty() ? GenerationParams{} : load_params(read_text_file(o.params));
  params.validate();
  emit(o.out, save_scenario(generate(params, o.seed)));
  return kExitOk;
}

int finish_exact(const Scenario& sc, const SolveOutcome& out, const std::string& path) {
  std::cerr << "status           " << to_string(out.status) << "\n"
            << "nodes            " << out.nodes_explored << "\n"
            << "runtime ms       " << out.runtime.count() << "\n";
  if (out.status == SolveStatus::kLimitReached) std::cerr << "best bound       " << out.best_bound << "\n";
  if (out.assignment) {
    print_report(std::cerr, *out.report, sc.tasks.size());
    emit(path, save_assignment(*out.assignment, &sc));
  }
  switch (out.status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kInfeasible:
      return kExitFailed;
    case SolveStatus::kLimitReached:
      return kExitLimit;
  }
  return kExitOk;
}

int run_solve(const Options& o) {
  const Scenario sc = read_scenario_file(o.scenario);
  if (o.alg == "exact") return finish_exact(sc, solve(sc, solve_options(o)), o.out);
  if (o.mode == "qos_less") {
    std::cerr << "note: heuristics always respect deadlines; --mode is ignored\n";
  }
  const Assignment a = o.alg == "local" ? local_serving(sc) : global_serving(sc);
  print_report(std::cerr, evaluate_objective(sc, a), sc.tasks.size());
  emit(o.out, save_assignment(a, &sc));
  return kExitOk;
}

int run_oracle(const Options& o) {
  const Scenario sc = read_scenario_file(o.scenario);
  return finish_exact(sc, brute_force(sc, solve_options(o)), o.out);
}

int run_validate(const Options& o) {
  const Scenario sc = read_scenario_file(o.scenario);
  const Assignment a = load_assignment(read_text_file(o.assignment));
  const std::vector<Violation> found =
      o.constraints.empty() ? validate(sc, a) : validate(sc, a, std::span<const int>(o.constraints));
  for (const Violation& v : found) std::cout << v.describe() << "\n";
  if (found.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  std::cout << found.size() << " violation(s)\n";
  return kExitFailed;
}

int run_export(const Options& o) {
  const Scenario sc = read_scenario_file(o.scenario);
  emit(o.out, milp_to_json(build_milp(sc, parse_mode(o.mode))));
  return kExitOk;
}

int write_result(const Options& o, const SweepResult& result, const std::string& swept) {
  const std::vector<SummaryRow> summary = summarize(result, {.paired = o.paired});
  std::ostringstream os;
  if (o.format == "svg") {
    write_svg(summary, swept, o.metric == "drop" ? PlotMetric::kDropFraction : PlotMetric::kObjective, os);
  } else {
    write_csv(result, os);
  }
  emit(o.out, os.str());
  if (!o.summary.empty()) {
    std::ostringstream ss;
    write_summary_csv(summary, ss);
    write_text_file(o.summary, ss.str());
  }
  return kExitOk;
}

int run_sweep_cmd(const Options& o) {
  SweepSpec spec = load_sweep_spec(read_text_file(o.params));
  if (o.workers) spec.workers = *o.workers;
  spec.validate();
  return write_result(o, run_sweep(spec), to_string(spec.swept));
}

int run_summarize(const Options& o) {
  std::ifstream in(o.csv);
  if (!in) throw ParseError("cannot read " + o.csv);
  const SweepResult result = read_csv(in);
  const std::string swept = result.rows.empty() ? "value" : result.rows.front().swept_param;
  if (o.format == "svg") return write_result(o, result, swept);
  std::ostringstream os;
  write_summary_csv(summarize(result, {.paired = o.paired}), os);
  emit(o.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Service placement and task scheduling on edge cloudlets"};
  app.require_subcommand(1);
  Options o;

  const auto add_out = [&o](CLI::App* cmd) { cmd->add_option("--out", o.out, "Output path (stdout if omitted)"); };
  const auto add_scenario = [&o](CLI::App* cmd) {
    cmd->add_option("--scenario", o.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  };
  const auto add_mode = [&o](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "Deadline handling")
        ->check(CLI::IsMember({"qos_aware", "qos_less"}));
  };
  const auto add_limits = [&o](CLI::App* cmd) {
    cmd->add_option("--node-limit", o.node_limit, "Branch-and-bound node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", o.time_limit_ms, "Time budget in milliseconds")->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a random scenario");
  gen->add_option("--params", o.params, "Generation parameters (JSON)")->check(CLI::ExistingFile);
  gen->add_option("--seed", o.seed, "Random seed");
  add_out(gen);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a scenario");
  add_scenario(solve_cmd);
  solve_cmd->add_option("--alg", o.alg, "Algorithm")->check(CLI::IsMember({"exact", "local", "global"}));
  add_mode(solve_cmd);
  add_limits(solve_cmd);
  add_out(solve_cmd);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search on a tiny scenario");
  add_scenario(oracle);
  add_mode(oracle);
  add_out(oracle);

  CLI::App* val = app.add_subcommand("validate", "Check an assignment against a scenario");
  add_scenario(val);
  val->add_option("--assignment", o.assignment, "Assignment file")->required()->check(CLI::ExistingFile);
  val->add_option("--constraints", o.constraints, "Only check these constraint numbers (1,2,3,4,7)")
      ->delimiter(',')
      ->check(CLI::IsMember({1, 2, 3, 4, 7}));

  CLI::App* exp = app.add_subcommand("export-milp", "Write the integer program as JSON");
  add_scenario(exp);
  add_mode(exp);
  add_out(exp);

  const auto add_report = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--metric", o.metric, "Plotted metric for svg")->check(CLI::IsMember({"objective", "drop"}));
    cmd->add_option("--summary", o.summary, "Also write per-value means as CSV");
    cmd->add_flag("--paired", o.paired, "Average only replications where every algorithm succeeded");
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--params", o.params, "Sweep spec (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_report(sweep);
  add_out(sweep);

  CLI::App* summ = app.add_subcommand("summarize", "Summarize or plot a sweep CSV");
  summ->add_option("--csv", o.csv, "Sweep CSV")->required()->check(CLI::ExistingFile);
  add_report(summ);
  add_out(summ);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (solve_cmd->parsed()) return run_solve(o);
    if (oracle->parsed()) return run_oracle(o);
    if (val->parsed()) return run_validate(o);
    if (exp->parsed()) return run_export(o);
    if (sweep->parsed()) return run_sweep_cmd(o);
    if (summ->parsed()) return run_summarize(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
