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

#ifndef SIMGRAPH_INSTANCE_HPP_
#define SIMGRAPH_INSTANCE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simgraph/graph.hpp"

namespace simgraph {

// Which of the two input graphs.
enum class Side : int { kFirst = 0, kSecond = 1 };

inline constexpr std::array<Side, 2> kBothSides = {Side::kFirst, Side::kSecond};

inline int index_of(Side s) { return static_cast<int>(s); }
inline Side other(Side s) { return s == Side::kFirst ? Side::kSecond : Side::kFirst; }

using NamedEdge = std::pair<std::string, std::string>;

// Two graphs G1 = (V1, E1) and G2 = (V2, E2) that share X = V1 ∩ V2 and
// the edges induced by X, plus an optional set of forced edges between
// V1 - X and V2 - X.
//
// Vertices of V1 ∪ V2 live in one id space ordered by name; both edge
// relations are stored as bitset rows over that space. Instances are
// immutable once built; every constructor validates.
class SharedInstance {
 public:
  // Builds and validates. Throws Error with kSyntaxError (bad or duplicate
  // names), kIllegalEdge, kXInducedMismatch or kIllegalForced.
  static SharedInstance from_lists(std::vector<std::string> v1, std::vector<std::string> v2,
                                   const std::vector<NamedEdge>& e1,
                                   const std::vector<NamedEdge>& e2,
                                   const std::vector<NamedEdge>& forced = {});

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;

  const Bitset& side_set(Side s) const { return side_[index_of(s)]; }
  const Bitset& shared_set() const { return shared_; }
  Bitset private_set(Side s) const { return side_[index_of(s)] - shared_; }
  Bitset all_vertices() const { return Bitset(size()).set(); }

  bool in_side(Side s, VertexId v) const { return side_[index_of(s)].test(v); }
  bool in_shared(VertexId v) const { return shared_.test(v); }
  bool is_private(Side s, VertexId v) const { return in_side(s, v) && !in_shared(v); }
  // u-v joins V1 - X and V2 - X.
  bool is_augmenting_pair(VertexId u, VertexId v) const;

  const Bitset& neighbors(Side s, VertexId v) const { return adj_[index_of(s)][v]; }
  bool has_edge(Side s, VertexId u, VertexId v) const { return adj_[index_of(s)][u].test(v); }
  // Edge of E1 ∪ E2.
  bool has_edge(VertexId u, VertexId v) const {
    return has_edge(Side::kFirst, u, v) || has_edge(Side::kSecond, u, v);
  }
  const std::vector<Bitset>& adjacency(Side s) const { return adj_[index_of(s)]; }

  EdgeSet edges(Side s) const;
  // E1 ∪ E2, each shared edge once.
  EdgeSet all_edges() const;
  // Edges induced by X.
  EdgeSet shared_edges() const;
  const EdgeSet& forced() const { return forced_; }

  // G_s as a standalone graph on V_s (ids renumbered, names kept).
  Graph graph(Side s) const;
  // The id in this instance of vertex `local` of graph(s).
  VertexId from_local(Side s, VertexId local) const;

  SharedInstance with_forced(const EdgeSet& forced) const;
  // Deletes each listed edge from whichever of E1, E2 contains it.
  SharedInstance without_edges(const EdgeSet& edges) const;

  bool operator==(const SharedInstance&) const = default;

 private:
  SharedInstance() = default;
  void validate_forced() const;

  std::vector<std::string> names_;
  std::array<Bitset, 2> side_;
  Bitset shared_;
  std::array<std::vector<Bitset>, 2> adj_;
  EdgeSet forced_;
};

// Text instance format, one statement per line:
//   V1: <name>+   V2: <name>+   E1: <a>-<b> ...   E2: ...   F: ... (optional)
// '#' starts a comment. X is the name intersection of V1 and V2.
SharedInstance parse_instance(std::string_view text);
std::string serialize_instance(const SharedInstance& inst);

// Complements of G1 on V1 and of G2 on V2. Throws kForcedNotSupported on
// instances with forced edges.
SharedInstance complement_pair(const SharedInstance& inst);

// Graph on V1 ∪ V2 with edges E1 ∪ E2 ∪ forced ∪ a. Throws kIllegalEdge if
// `a` holds a pair that is not augmenting.
Graph union_graph(const SharedInstance& inst, const EdgeSet& a);

// All pairs of (V1 - X) x (V2 - X).
EdgeSet augmenting_pairs(const SharedInstance& inst);

std::string format_edge(const SharedInstance& inst, Edge e);
std::string format_edges(const SharedInstance& inst, const EdgeSet& edges);
std::string format_vertices(const SharedInstance& inst, std::span<const VertexId> vertices);

}  // namespace simgraph

#endif  // SIMGRAPH_INSTANCE_HPP_
