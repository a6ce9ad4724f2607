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


#ifndef EDGEPLACE_ASSIGNMENT_IO_HPP_
#define EDGEPLACE_ASSIGNMENT_IO_HPP_

#include <string>

#include "edgeplace/model.hpp"

namespace edgeplace {

// {"placements": [[service, node], ...], "schedules": [[task, node], ...],
//  "unserved": [task, ...]}. When a scenario is given the document also
// carries a "report" object (costs, drops, violations) for readers; it is
// ignored on load.
std::string save_assignment(const Assignment& assignment, const Scenario* scenario = nullptr);
// Throws ParseError. Ids are checked against a scenario by validate().
Assignment load_assignment(const std::string& document);

}  // namespace edgeplace

#endif  // EDGEPLACE_ASSIGNMENT_IO_HPP_
