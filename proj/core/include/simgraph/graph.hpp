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

#ifndef SIMGRAPH_GRAPH_HPP_
#define SIMGRAPH_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace simgraph {

using VertexId = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Calls fn(v) for every set bit v of `bits`, in increasing order.
template <typename Fn>
void for_each_bit(const Bitset& bits, Fn&& fn) {
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) {
    fn(static_cast<VertexId>(v));
  }
}

std::vector<VertexId> to_vector(const Bitset& bits);
Bitset to_bitset(std::span<const VertexId> vertices, std::size_t universe);

// Undirected edge, endpoints stored sorted (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Directed edge tail -> head.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  Arc reversed() const { return Arc{head, tail}; }
  Edge undirected() const { return Edge::of(tail, head); }
  auto operator<=>(const Arc&) const = default;
};

// Sorted, duplicate-free set of undirected edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  bool insert(Edge e);
  bool contains(Edge e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& items() const { return edges_; }

  EdgeSet united(const EdgeSet& other) const;
  bool includes(const EdgeSet& other) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Sorted, duplicate-free set of ordered pairs. Orientations, classes and
// augmenting arcs are all stored this way.
class DirectedEdgeSet {
 public:
  DirectedEdgeSet() = default;
  DirectedEdgeSet(std::initializer_list<Arc> arcs);
  explicit DirectedEdgeSet(std::vector<Arc> arcs);

  bool insert(Arc a);
  bool contains(Arc a) const;
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }
  const std::vector<Arc>& items() const { return arcs_; }

  DirectedEdgeSet inverse() const;
  // S together with its inverse.
  DirectedEdgeSet hat() const { return united(inverse()); }
  DirectedEdgeSet united(const DirectedEdgeSet& other) const;
  DirectedEdgeSet intersected(const DirectedEdgeSet& other) const;
  // Arcs whose endpoints both lie in `vertices`.
  DirectedEdgeSet restricted_to(const Bitset& vertices) const;
  EdgeSet undirected() const;

  bool operator==(const DirectedEdgeSet&) const = default;
  // Lexicographic on the sorted arcs, for use as an ordered key.
  bool operator<(const DirectedEdgeSet& other) const { return arcs_ < other.arcs_; }

 private:
  std::vector<Arc> arcs_;
};

// Simple undirected graph on ids 0..size()-1 with a name per id.
// Adjacency is one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  // `names` must be sorted and unique; id i is names[i].
  explicit Graph(std::vector<std::string> names);
  // Vertices named v0, v1, ... zero-padded so that name order equals id order.
  static Graph with_vertices(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
  const Bitset& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].count(); }

  void add_edge(VertexId u, VertexId v);
  void add_edge(Edge e) { add_edge(e.u, e.v); }
  void remove_edge(VertexId u, VertexId v);

  EdgeSet edges() const;
  std::size_t edge_count() const;
  Graph complement() const;
  Bitset empty_set() const { return Bitset(size()); }
  Bitset full_set() const { return Bitset(size()).set(); }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> adj_;
};

// Perfect elimination ordering: each order[i] is simplicial among
// order[i..].
struct Peo {
  std::vector<VertexId> order;
};

bool is_clique(const Graph& g, const Bitset& vertices);

// True iff `order` is a permutation of g's vertices and a perfect
// elimination ordering of g.
bool is_peo(const Graph& g, std::span<const VertexId> order);

// Maximum cardinality search followed by an explicit verification pass.
// Returns nothing iff g is not chordal. Deterministic: the search always
// numbers the largest-id candidate next, so among equal candidates the
// smallest id lands earliest in the elimination order.
std::optional<Peo> find_peo(const Graph& g);

bool is_chordal(const Graph& g);

// (a,b), (b,c) in t implies (a,c) in t.
bool is_transitive(const DirectedEdgeSet& t);

}  // namespace simgraph

#endif  // SIMGRAPH_GRAPH_HPP_
