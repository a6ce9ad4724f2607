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

#ifndef EDGEPLACE_SCENARIO_GEN_HPP_
#define EDGEPLACE_SCENARIO_GEN_HPP_

#include <cstdint>
#include <string>

#include "edgeplace/generation_params.hpp"
#include "edgeplace/model.hpp"

namespace edgeplace {

// Deterministic in (params, seed). Cloudlets land uniformly on the
// [0, grid]^2 square; cloudlet distances are Euclidean * distance_scale and
// the cloud sits at cloud_distance_multiple * grid diagonal * distance_scale
// from every cloudlet. Cloudlet scheduling costs are drawn in
// [P_cloud, beta * P_cloud]; deadlines are qos_factor * compute time.
//
// Draws come from independent substreams per cloudlet, service and task
// (see derive_seed).
Scenario generate(const GenerationParams& params, std::uint64_t seed);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-describing JSON with keys seed, params, nodes, services, tasks,
// distances. Doubles keep full round-trip precision.
std::string save_scenario(const Scenario& scenario);
// Throws ParseError naming the offending key, or ScenarioError when the
// document parses but breaks a scenario invariant.
Scenario load_scenario(const std::string& document);

std::string save_params(const GenerationParams& params);
// Missing keys keep their defaults.
GenerationParams load_params(const std::string& document);

Scenario read_scenario_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace edgeplace

#endif  // EDGEPLACE_SCENARIO_GEN_HPP_
