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

#ifndef EDGEPLACE_RNG_HPP_
#define EDGEPLACE_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "edgeplace/generation_params.hpp"

namespace edgeplace {

// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

// Seed for substream `index` of family `tag` under `seed`. Distinct
// (tag, index) pairs give independent streams, so adding entities never
// shifts the draws of existing ones.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

// Portable random stream: std::mt19937_64 (fully specified by the standard)
// with hand-rolled conversions, since <random> distributions are
// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(Range r) { return r.low + (r.high - r.low) * uniform01(); }
  // low or high with equal probability.
  double endpoint(Range r) { return coin() ? r.high : r.low; }
  bool coin() { return (engine_() >> 63) != 0; }
  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace edgeplace

#endif  // EDGEPLACE_RNG_HPP_
