// Copyright 2026 The simgraph Authors
//
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

#ifndef SIMGRAPH_GENERATE_HPP_
#define SIMGRAPH_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "simgraph/instance.hpp"
#include "simgraph/oracle.hpp"

namespace simgraph {

// Knob for the planted generators. Chordal draws G(N, density) and fills it
// in along a random elimination order (default 2/N); comparability keeps each
// pair of a hidden linear order with this probability before closing
// transitively (default 1/2); permutation ignores it.
struct PlantedOptions {
  std::optional<double> density;
};

// Draws a member of `cls` on n1 + n2 - nx vertices, splits it into
// X (nx vertices), V1 - X and V2 - X at random, and drops the edges between
// the two private parts. The dropped edges are an augmentation, so the
// result is always a YES instance. X vertices are named x.., V1 - X a..,
// V2 - X b... Deterministic per seed.
SharedInstance planted_yes(GraphClass cls, std::size_t n1, std::size_t n2, std::size_t nx,
                           std::uint64_t seed, const PlantedOptions& options = {});

// Independent edges with probability edge_prob inside V1 and inside V2; the
// X block is drawn once and shared.
SharedInstance random_instance(std::size_t n1, std::size_t n2, std::size_t nx, double edge_prob,
                               std::uint64_t seed);

}  // namespace simgraph

#endif  // SIMGRAPH_GENERATE_HPP_
