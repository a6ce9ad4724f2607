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

#include "edgeplace/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>

#include "edgeplace/timing.hpp"

namespace edgeplace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using Clock = std::chrono::steady_clock;

struct TaskData {
  TaskId id = 0;
  int slot = 0;  // index into the requested-service table
  double sigma = 0.0;
  std::vector<NodeId> targets;
};

class BranchAndBound {
 public:
  BranchAndBound(const Scenario& sc, const SolveOptions& opt)
      : sc_(sc), opt_(opt), nc_(sc.num_cloudlets()), cloud_(sc.cloud()) {
    std::vector<int> slot_of(sc.services.size(), -1);
    for (ServiceId m : sc.requested_services()) {
      slot_of[static_cast<std::size_t>(m)] = static_cast<int>(slot_service_.size());
      slot_service_.push_back(m);
    }
    tasks_.reserve(sc.tasks.size());
    for (const Task& t : sc.tasks) {
      TaskData td;
      td.id = t.id;
      td.slot = slot_of[static_cast<std::size_t>(t.service)];
      td.sigma = t.compute_time;
      td.targets = candidate_nodes(t, sc, opt.mode);
      tasks_.push_back(std::move(td));
    }
    order_.resize(tasks_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
      return tasks_[a].targets.size() < tasks_[b].targets.size();
    });

    for (NodeId j = 0; j < nc_; ++j) {
      compute_left_.push_back(sc.nodes[static_cast<std::size_t>(j)].compute_capacity);
      storage_left_.push_back(sc.nodes[static_cast<std::size_t>(j)].storage_capacity);
    }
    placed_refs_.assign(slot_service_.size() * static_cast<std::size_t>(nc_), 0);
    choice_.assign(tasks_.size(), -1);
    need_.assign(slot_service_.size(), 0.0);
    needs_new_.assign(slot_service_.size(), false);
  }

  SolveOutcome run() {
    const auto start = Clock::now();
    start_ = start;
    SolveOutcome out;
    const double root = bound(0);
    if (root < kInf) dive(0);
    out.nodes_explored = nodes_;

    if (has_incumbent_) {
      Assignment a;
      for (std::size_t i = 0; i < tasks_.size(); ++i) {
        a.schedules.emplace(tasks_[i].id, best_[i]);
      }
      a.placements = induced_placements(sc_, a.schedules);
      CostReport report = evaluate_objective(sc_, a);
      if (stopped_) {
        out.status = SolveStatus::kLimitReached;
        out.best_bound = std::min(open_bound_, report.total);
      } else {
        out.status = SolveStatus::kOptimal;
        out.best_bound = report.total;
      }
      out.assignment = std::move(a);
      out.report = std::move(report);
    } else if (stopped_) {
      out.status = SolveStatus::kLimitReached;
      out.best_bound = std::min(open_bound_, root);
    } else {
      out.status = SolveStatus::kInfeasible;
      out.best_bound = kInf;
    }
    out.runtime = Clock::now() - start;
    return out;
  }

 private:
  const Service& service(int slot) const {
    return sc_.services[static_cast<std::size_t>(slot_service_[static_cast<std::size_t>(slot)])];
  }
  int& refs(int slot, NodeId j) {
    return placed_refs_[static_cast<std::size_t>(slot) * static_cast<std::size_t>(nc_) +
                        static_cast<std::size_t>(j)];
  }
  int refs(int slot, NodeId j) const {
    return placed_refs_[static_cast<std::size_t>(slot) * static_cast<std::size_t>(nc_) +
                        static_cast<std::size_t>(j)];
  }

  bool fits(const TaskData& t, NodeId j) const {
    if (j == cloud_) return true;
    const auto uj = static_cast<std::size_t>(j);
    if (compute_left_[uj] < t.sigma) return false;
    return refs(t.slot, j) > 0 || storage_left_[uj] >= service(t.slot).storage_demand;
  }

  double marginal_cost(const TaskData& t, NodeId j) const {
    const Service& s = service(t.slot);
    double c = s.schedule_cost[static_cast<std::size_t>(j)];
    if (j != cloud_ && refs(t.slot, j) == 0) c += s.placement_cost[static_cast<std::size_t>(j)];
    return c;
  }

  // Admissible bound on any completion of the first `depth` decisions:
  // cost so far, cheapest capacity-admissible scheduling cost per open task,
  // and per service the largest unavoidable new-placement cost among its
  // cloud-infeasible open tasks. Aggregate compute and storage checks prune
  // subtrees that cannot host the cloud-infeasible remainder.
  double bound(std::size_t depth) {
    double lb = cost_so_far_;
    double forced_sigma = 0.0;
    touched_.clear();
    for (std::size_t d = depth; d < order_.size(); ++d) {
      const TaskData& t = tasks_[order_[d]];
      const Service& s = service(t.slot);
      double best_sched = kInf;
      double best_place = kInf;
      bool cloud_ok = false;
      bool reuses = false;
      for (NodeId j : t.targets) {
        if (!fits(t, j)) continue;
        best_sched = std::min(best_sched, s.schedule_cost[static_cast<std::size_t>(j)]);
        if (j == cloud_) {
          cloud_ok = true;
        } else if (refs(t.slot, j) > 0) {
          reuses = true;
          best_place = 0.0;
        } else {
          best_place = std::min(best_place, s.placement_cost[static_cast<std::size_t>(j)]);
        }
      }
      if (best_sched == kInf) return kInf;
      lb += best_sched;
      if (!cloud_ok) {
        forced_sigma += t.sigma;
        const auto slot = static_cast<std::size_t>(t.slot);
        if (need_[slot] == 0.0 && !needs_new_[slot]) touched_.push_back(t.slot);
        need_[slot] = std::max(need_[slot], best_place);
        if (!reuses) needs_new_[slot] = true;
      }
    }
    double placement_lb = 0.0;
    double storage_needed = 0.0;
    for (int slot : touched_) {
      const auto us = static_cast<std::size_t>(slot);
      placement_lb += need_[us];
      if (needs_new_[us]) storage_needed += service(slot).storage_demand;
      need_[us] = 0.0;
      needs_new_[us] = false;
    }
    if (forced_sigma > 0.0) {
      double compute_total = 0.0;
      double storage_total = 0.0;
      for (NodeId j = 0; j < nc_; ++j) {
        compute_total += compute_left_[static_cast<std::size_t>(j)];
        storage_total += storage_left_[static_cast<std::size_t>(j)];
      }
      if (forced_sigma > compute_total || storage_needed > storage_total) return kInf;
    }
    return lb + placement_lb;
  }

  bool out_of_budget() {
    if (opt_.node_limit && nodes_ >= *opt_.node_limit) return true;
    if (opt_.time_limit && (nodes_ & 255) == 0 && Clock::now() - start_ >= *opt_.time_limit) {
      return true;
    }
    return false;
  }

  // Same summation order as evaluate_objective, so equal assignments give
  // bit-identical totals.
  double canonical_total() const {
    double placement = 0.0;
    for (std::size_t slot = 0; slot < slot_service_.size(); ++slot) {
      for (NodeId j = 0; j < nc_; ++j) {
        if (refs(static_cast<int>(slot), j) > 0) {
          placement += service(static_cast<int>(slot)).placement_cost[static_cast<std::size_t>(j)];
        }
      }
    }
    double scheduling = 0.0;
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      scheduling += service(tasks_[i].slot).schedule_cost[static_cast<std::size_t>(choice_[i])];
    }
    return placement + scheduling;
  }

  // Capacity check in task-id order, mirroring validate().
  bool leaf_capacities_ok() const {
    std::vector<double> compute(static_cast<std::size_t>(nc_), 0.0);
    std::vector<double> storage(static_cast<std::size_t>(nc_), 0.0);
    for (std::size_t slot = 0; slot < slot_service_.size(); ++slot) {
      for (NodeId j = 0; j < nc_; ++j) {
        if (refs(static_cast<int>(slot), j) > 0) {
          storage[static_cast<std::size_t>(j)] += service(static_cast<int>(slot)).storage_demand;
        }
      }
    }
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      if (choice_[i] != cloud_) compute[static_cast<std::size_t>(choice_[i])] += tasks_[i].sigma;
    }
    for (NodeId j = 0; j < nc_; ++j) {
      const Node& n = sc_.nodes[static_cast<std::size_t>(j)];
      if (compute[static_cast<std::size_t>(j)] > n.compute_capacity) return false;
      if (storage[static_cast<std::size_t>(j)] > n.storage_capacity) return false;
    }
    return true;
  }

  void dive(std::size_t depth) {
    if (stopped_ || out_of_budget()) {
      stopped_ = true;
      return;
    }
    ++nodes_;
    if (depth == order_.size()) {
      if (!leaf_capacities_ok()) return;
      const double total = canonical_total();
      if (total < best_cost_) {
        has_incumbent_ = true;
        best_cost_ = total;
        best_.assign(choice_.begin(), choice_.end());
      }
      return;
    }
    const double lb = bound(depth);
    if (lb == kInf) return;
    if (best_cost_ < kInf && lb > best_cost_ + 1e-9 * std::max(1.0, std::abs(best_cost_))) return;

    const std::size_t ti = order_[depth];
    const TaskData& t = tasks_[ti];
    std::vector<std::pair<double, NodeId>> children;
    children.reserve(t.targets.size());
    for (NodeId j : t.targets) {
      if (fits(t, j)) children.emplace_back(marginal_cost(t, j), j);
    }
    std::sort(children.begin(), children.end());

    const Service& s = service(t.slot);
    for (const auto& [cost, j] : children) {
      const double saved_cost = cost_so_far_;
      double saved_compute = 0.0;
      double saved_storage = 0.0;
      cost_so_far_ += cost;
      if (j != cloud_) {
        const auto uj = static_cast<std::size_t>(j);
        saved_compute = compute_left_[uj];
        saved_storage = storage_left_[uj];
        compute_left_[uj] -= t.sigma;
        if (refs(t.slot, j)++ == 0) storage_left_[uj] -= s.storage_demand;
      }
      choice_[ti] = j;

      dive(depth + 1);

      choice_[ti] = -1;
      if (j != cloud_) {
        const auto uj = static_cast<std::size_t>(j);
        --refs(t.slot, j);
        compute_left_[uj] = saved_compute;
        storage_left_[uj] = saved_storage;
      }
      cost_so_far_ = saved_cost;
      if (stopped_) {
        open_bound_ = std::min(open_bound_, lb);
        return;
      }
    }
  }

  const Scenario& sc_;
  const SolveOptions& opt_;
  const int nc_;
  const NodeId cloud_;

  std::vector<ServiceId> slot_service_;
  std::vector<TaskData> tasks_;
  std::vector<std::size_t> order_;

  std::vector<double> compute_left_;
  std::vector<double> storage_left_;
  std::vector<int> placed_refs_;
  std::vector<NodeId> choice_;
  double cost_so_far_ = 0.0;

  // Scratch for bound().
  std::vector<double> need_;
  std::vector<bool> needs_new_;
  std::vector<int> touched_;

  std::vector<NodeId> best_;
  double best_cost_ = kInf;
  bool has_incumbent_ = false;
  double open_bound_ = kInf;
  std::int64_t nodes_ = 0;
  bool stopped_ = false;
  Clock::time_point start_;
};

SolveOutcome solve_external(const Scenario& sc, const SolveOptions& opt) {
  if (!opt.external) {
    throw std::invalid_argument("external MILP backend selected but none configured");
  }
  const auto start = Clock::now();
  SolveOutcome out;
  const MilpModel model = build_milp(sc, opt.mode);
  const std::optional<std::vector<double>> values = opt.external->solve(model);
  if (!values) {
    out.status = SolveStatus::kInfeasible;
    out.best_bound = kInf;
  } else {
    Assignment a = decode_milp_solution(sc, model, *values);
    CostReport report = evaluate_objective(sc, a);
    out.status = SolveStatus::kOptimal;
    out.best_bound = report.total;
    out.assignment = std::move(a);
    out.report = std::move(report);
  }
  out.runtime = Clock::now() - start;
  return out;
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kLimitReached:
      return "limit_reached";
  }
  return "unknown";
}

const char* to_string(QosMode mode) { return mode == QosMode::kAware ? "qos_aware" : "qos_less"; }

std::vector<NodeId> candidate_nodes(const Task& task, const Scenario& scenario, QosMode mode) {
  if (mode == QosMode::kAware) return feasible_targets(task, scenario);
  std::vector<NodeId> all(static_cast<std::size_t>(scenario.num_nodes()));
  for (NodeId j = 0; j < scenario.num_nodes(); ++j) all[static_cast<std::size_t>(j)] = j;
  return all;
}

SolveOutcome solve(const Scenario& scenario, const SolveOptions& options) {
  if (options.node_limit && *options.node_limit <= 0) {
    throw std::invalid_argument("node_limit must be positive");
  }
  if (options.time_limit && options.time_limit->count() <= 0) {
    throw std::invalid_argument("time_limit must be positive");
  }
  scenario.validate();
  if (options.backend == SolverBackend::kExternalMilp) return solve_external(scenario, options);
  BranchAndBound bnb(scenario, options);
  return bnb.run();
}

double lower_bound(const Scenario& sc, const PartialAssignment& partial, QosMode mode) {
  if (partial.schedule.size() != sc.tasks.size()) {
    throw std::invalid_argument("partial assignment must cover every task slot");
  }
  std::map<TaskId, NodeId> assigned;
  double remainder = 0.0;
  for (const Task& t : sc.tasks) {
    const auto& choice = partial.schedule[static_cast<std::size_t>(t.id)];
    if (choice) {
      if (*choice < 0 || *choice >= sc.num_nodes()) {
        throw UnknownIdError("partial assignment references unknown node " +
                             std::to_string(*choice));
      }
      assigned.emplace(t.id, *choice);
      continue;
    }
    double cheapest = kInf;
    for (NodeId j : candidate_nodes(t, sc, mode)) cheapest = std::min(cheapest, sc.schedule_cost(t, j));
    if (cheapest == kInf) return kInf;
    remainder += cheapest;
  }
  double placement = 0.0;
  for (const auto& [m, j] : induced_placements(sc, assigned)) {
    placement += sc.services[static_cast<std::size_t>(m)].placement_cost[static_cast<std::size_t>(j)];
  }
  double scheduling = 0.0;
  for (const auto& [tid, j] : assigned) {
    scheduling += sc.schedule_cost(sc.tasks[static_cast<std::size_t>(tid)], j);
  }
  return (placement + scheduling) + remainder;
}

}  // namespace edgeplace
