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

#ifndef SIMGRAPH_ORACLE_HPP_
#define SIMGRAPH_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "simgraph/graph.hpp"
#include "simgraph/instance.hpp"

namespace simgraph {

enum class GraphClass { kChordal, kComparability, kPermutation };

std::string_view to_string(GraphClass cls);
std::optional<GraphClass> parse_graph_class(std::string_view text);

// Caps for the exhaustive searches. An oracle call that would go past one
// of them throws kBudgetExceeded instead.
struct OracleBudget {
  // Augmentation subsets tried by oracle_simultaneous.
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  // Nodes of the orientation search tree (2^|E| leaves before pruning).
  std::uint64_t max_orientations = std::uint64_t{1} << 18;
  // Largest vertex count for the ordering search.
  std::size_t max_factorial_n = 8;
};

// Vertex cap of the chordless-cycle search.
inline constexpr std::size_t kMaxChordalOracleVertices = 16;

// Brute-force class membership. Shares no code with the recognizers:
// chordal looks for a chordless cycle of length >= 4 by extending induced
// paths, comparability backtracks over edge orientations, permutation
// takes both routes below and throws std::logic_error if they differ.
bool oracle_member(const Graph& g, GraphClass cls, const OracleBudget& budget = {});

// Backtracking orientation search.
bool oracle_comparability(const Graph& g, const OracleBudget& budget = {});
// G and its complement are both comparability graphs.
bool oracle_permutation_by_complement(const Graph& g, const OracleBudget& budget = {});
// Fixes each ordering L in turn (pruned) and checks that the order P forced
// by the edges is acyclic.
bool oracle_permutation_by_orders(const Graph& g, const OracleBudget& budget = {});

// Some A ⊆ (V1 - X) x (V2 - X) puts union_graph(inst, A) in `cls`. For
// chordal the forced edges are always included; the other classes reject
// forced edges with kForcedNotSupported.
bool oracle_simultaneous(const SharedInstance& inst, GraphClass cls,
                         const OracleBudget& budget = {});

}  // namespace simgraph

#endif  // SIMGRAPH_ORACLE_HPP_
