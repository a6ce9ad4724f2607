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


#include "edgeplace/assignment_io.hpp"

#include "edgeplace/json_util.hpp"

namespace edgeplace {

using nlohmann::json;

std::string save_assignment(const Assignment& a, const Scenario* scenario) {
  json doc;
  json placements = json::array();
  for (const auto& [s, j] : a.placements) placements.push_back(json::array({s, j}));
  json schedules = json::array();
  for (const auto& [t, j] : a.schedules) schedules.push_back(json::array({t, j}));
  doc["placements"] = std::move(placements);
  doc["schedules"] = std::move(schedules);
  doc["unserved"] = a.unserved;
  if (scenario) {
    const CostReport r = evaluate_objective(*scenario, a);
    json violations = json::array();
    for (const Violation& v : r.violations) violations.push_back(v.describe());
    doc["report"] = {{"placement_cost", r.placement_cost},
                     {"scheduling_cost", r.scheduling_cost},
                     {"total", r.total},
                     {"drop_count", r.drop_count},
                     {"drop_fraction", r.drop_fraction},
                     {"violations", std::move(violations)}};
  }
  return doc.dump(1);
}

Assignment load_assignment(const std::string& document) {
  const json doc = json_util::parse(document);
  Assignment a;
  for (const auto& [s, j] : json_util::get<std::vector<std::pair<int, int>>>(doc, "placements")) {
    a.placements.emplace(s, j);
  }
  for (const auto& [t, j] : json_util::get<std::vector<std::pair<int, int>>>(doc, "schedules")) {
    if (!a.schedules.emplace(t, j).second) {
      throw ParseError("task " + std::to_string(t) + " appears twice in \"schedules\"");
    }
  }
  if (doc.contains("unserved")) {
    for (int t : json_util::get<std::vector<int>>(doc, "unserved")) a.unserved.insert(t);
  }
  return a;
}

}  // namespace edgeplace
