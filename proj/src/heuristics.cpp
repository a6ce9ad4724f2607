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

#include "edgeplace/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "edgeplace/timing.hpp"

namespace edgeplace {

namespace {

// Remaining capacity of one node during a greedy pass. The cloud budget is
// unbounded and implicitly hosts every service.
struct NodeBudget {
  NodeId id = 0;
  double remaining_storage = 0.0;
  double remaining_compute = 0.0;
  std::set<ServiceId> placed_services;
};

std::vector<NodeBudget> initial_budgets(const Scenario& sc) {
  std::vector<NodeBudget> out;
  for (const Node& n : sc.nodes) out.push_back({n.id, n.storage_capacity, n.compute_capacity, {}});
  return out;
}

}  // namespace

Assignment local_serving(const Scenario& sc) {
  Assignment a;
  std::vector<NodeBudget> budgets = initial_budgets(sc);
  std::vector<bool> scheduled(sc.tasks.size(), false);

  for (NodeId cl = 0; cl < sc.num_cloudlets(); ++cl) {
    NodeBudget& b = budgets[static_cast<std::size_t>(cl)];
    std::vector<const Task*> attached;
    for (const Task& t : sc.tasks) {
      if (t.local_node == cl) attached.push_back(&t);
    }
    std::stable_sort(attached.begin(), attached.end(), [](const Task* x, const Task* y) {
      return x->qos_deadline < y->qos_deadline;
    });

    const auto service_fits = [&](const Task& t) {
      const double h = sc.services[static_cast<std::size_t>(t.service)].storage_demand;
      return (b.placed_services.contains(t.service) || h <= b.remaining_storage) &&
             t.compute_time <= b.remaining_compute;
    };

    while (true) {
      const Task* pick = nullptr;
      for (const Task* t : attached) {
        if (!scheduled[static_cast<std::size_t>(t->id)] && service_fits(*t)) {
          pick = t;
          break;
        }
      }
      if (pick == nullptr) break;

      if (b.placed_services.insert(pick->service).second) {
        b.remaining_storage -= sc.services[static_cast<std::size_t>(pick->service)].storage_demand;
        a.placements.emplace(pick->service, cl);
      }
      for (const Task* t : attached) {
        if (scheduled[static_cast<std::size_t>(t->id)] || t->service != pick->service) continue;
        if (t->compute_time > b.remaining_compute) continue;
        b.remaining_compute -= t->compute_time;
        scheduled[static_cast<std::size_t>(t->id)] = true;
        a.schedules.emplace(t->id, cl);
      }
    }
  }

  for (const Task& t : sc.tasks) {
    if (scheduled[static_cast<std::size_t>(t.id)]) continue;
    if (is_feasible(t, sc.cloud(), sc.distances)) {
      a.schedules.emplace(t.id, sc.cloud());
    } else {
      a.unserved.insert(t.id);
    }
  }
  return a;
}

Assignment global_serving(const Scenario& sc, const GlobalServingOptions& options) {
  Assignment a;
  std::vector<NodeBudget> budgets = initial_budgets(sc);
  const NodeId cloud = sc.cloud();

  // Open tasks per service, ascending compute time then id.
  std::vector<std::vector<const Task*>> open(sc.services.size());
  for (const Task& t : sc.tasks) open[static_cast<std::size_t>(t.service)].push_back(&t);
  for (auto& list : open) {
    std::stable_sort(list.begin(), list.end(), [](const Task* x, const Task* y) {
      return x->compute_time < y->compute_time;
    });
  }
  const std::vector<ServiceId> requested = sc.requested_services();

  // Cloud first, then cloudlets by id.
  std::vector<NodeId> node_order{cloud};
  for (NodeId j = 0; j < sc.num_cloudlets(); ++j) node_order.push_back(j);

  std::size_t remaining = sc.tasks.size();
  std::vector<const Task*> taken;
  std::vector<const Task*> best_taken;
  while (remaining > 0) {
    double best_profit = -1.0;
    NodeId best_node = -1;
    ServiceId best_service = -1;
    best_taken.clear();

    for (NodeId j : node_order) {
      const NodeBudget& b = budgets[static_cast<std::size_t>(j)];
      for (ServiceId s : requested) {
        const auto& list = open[static_cast<std::size_t>(s)];
        if (list.empty()) continue;
        const Service& svc = sc.services[static_cast<std::size_t>(s)];
        const bool placed = j == cloud || b.placed_services.contains(s);
        if (!placed && svc.storage_demand > b.remaining_storage) continue;

        taken.clear();
        double compute = b.remaining_compute;
        for (const Task* t : list) {
          if (!is_feasible(*t, j, sc.distances)) continue;
          if (t->compute_time > compute) break;
          compute -= t->compute_time;
          taken.push_back(t);
        }
        if (taken.empty()) continue;

        const auto count = static_cast<double>(taken.size());
        double profit;
        if (j == cloud) {
          profit = count / options.cloud_profit_divisor;
        } else if (placed && options.reuse_is_free) {
          profit = std::numeric_limits<double>::infinity();
        } else {
          profit = count / svc.placement_cost[static_cast<std::size_t>(j)];
        }
        if (profit > best_profit) {
          best_profit = profit;
          best_node = j;
          best_service = s;
          best_taken.swap(taken);
        }
      }
    }

    if (best_node < 0) break;

    NodeBudget& b = budgets[static_cast<std::size_t>(best_node)];
    if (best_node != cloud && b.placed_services.insert(best_service).second) {
      b.remaining_storage -= sc.services[static_cast<std::size_t>(best_service)].storage_demand;
      a.placements.emplace(best_service, best_node);
    }
    auto& list = open[static_cast<std::size_t>(best_service)];
    for (const Task* t : best_taken) {
      b.remaining_compute -= t->compute_time;
      a.schedules.emplace(t->id, best_node);
      list.erase(std::find(list.begin(), list.end(), t));
    }
    remaining -= best_taken.size();
  }

  for (const auto& list : open) {
    for (const Task* t : list) a.unserved.insert(t->id);
  }
  return a;
}

}  // namespace edgeplace
