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

#ifndef EDGEPLACE_JSON_UTIL_HPP_
#define EDGEPLACE_JSON_UTIL_HPP_

// Small helpers over nlohmann::json that turn type and presence errors into
// ParseError messages naming the key.

#include <string>

#include "edgeplace/scenario_gen.hpp"
#include "json.hpp"

namespace edgeplace::json_util {

inline nlohmann::json parse(const std::string& document) {
  try {
    return nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline const nlohmann::json& require(const nlohmann::json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("missing key \"" + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const nlohmann::json& j, const std::string& key) {
  const nlohmann::json& v = require(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("key \"" + key + "\" has the wrong type");
  }
}

template <typename T>
void read_optional(const nlohmann::json& j, const std::string& key, T& out) {
  if (j.contains(key)) out = get<T>(j, key);
}

}  // namespace edgeplace::json_util

#endif  // EDGEPLACE_JSON_UTIL_HPP_
