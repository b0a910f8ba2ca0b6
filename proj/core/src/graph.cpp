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

#include "simgraph/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "simgraph/errors.hpp"

namespace simgraph {

std::vector<VertexId> to_vector(const Bitset& bits) {
  std::vector<VertexId> out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](VertexId v) { out.push_back(v); });
  return out;
}

Bitset to_bitset(std::span<const VertexId> vertices, std::size_t universe) {
  Bitset bits(universe);
  for (VertexId v : vertices) bits.set(v);
  return bits;
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

template <typename T>
bool sorted_insert(std::vector<T>& items, const T& value) {
  auto it = std::lower_bound(items.begin(), items.end(), value);
  if (it != items.end() && *it == value) return false;
  items.insert(it, value);
  return true;
}

}  // namespace

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = Edge::of(e.u, e.v);
  sort_unique(edges_);
}

bool EdgeSet::insert(Edge e) { return sorted_insert(edges_, Edge::of(e.u, e.v)); }

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(e.u, e.v));
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  std::vector<Edge> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  EdgeSet result;
  result.edges_ = std::move(out);
  return result;
}

bool EdgeSet::includes(const EdgeSet& other) const {
  return std::includes(begin(), end(), other.begin(), other.end());
}

DirectedEdgeSet::DirectedEdgeSet(std::initializer_list<Arc> arcs)
    : DirectedEdgeSet(std::vector<Arc>(arcs)) {}

DirectedEdgeSet::DirectedEdgeSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  sort_unique(arcs_);
}

bool DirectedEdgeSet::insert(Arc a) { return sorted_insert(arcs_, a); }

bool DirectedEdgeSet::contains(Arc a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

DirectedEdgeSet DirectedEdgeSet::inverse() const {
  std::vector<Arc> out;
  out.reserve(size());
  for (const Arc& a : arcs_) out.push_back(a.reversed());
  return DirectedEdgeSet(std::move(out));
}

DirectedEdgeSet DirectedEdgeSet::united(const DirectedEdgeSet& other) const {
  std::vector<Arc> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  DirectedEdgeSet result;
  result.arcs_ = std::move(out);
  return result;
}

DirectedEdgeSet DirectedEdgeSet::intersected(const DirectedEdgeSet& other) const {
  std::vector<Arc> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  DirectedEdgeSet result;
  result.arcs_ = std::move(out);
  return result;
}

DirectedEdgeSet DirectedEdgeSet::restricted_to(const Bitset& vertices) const {
  DirectedEdgeSet result;
  for (const Arc& a : arcs_) {
    if (a.tail < vertices.size() && a.head < vertices.size() && vertices.test(a.tail) &&
        vertices.test(a.head)) {
      result.arcs_.push_back(a);
    }
  }
  return result;
}

EdgeSet DirectedEdgeSet::undirected() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (const Arc& a : arcs_) out.push_back(a.undirected());
  return EdgeSet(std::move(out));
}

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  if (!std::is_sorted(names_.begin(), names_.end()) ||
      std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw Error(ErrorCode::kSyntaxError, "graph vertex names must be sorted and unique");
  }
  adj_.assign(names_.size(), Bitset(names_.size()));
}

Graph Graph::with_vertices(std::size_t n) {
  std::size_t width = 1;
  for (std::size_t k = 10; k < n; k *= 10) ++width;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  return Graph(std::move(names));
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::kIllegalEdge, "loop at " + names_.at(u));
  adj_.at(u).set(v);
  adj_.at(v).set(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  adj_.at(u).reset(v);
  adj_.at(v).reset(u);
}

EdgeSet Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < size(); ++u) {
    for_each_bit(adj_[u], [&](VertexId v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return EdgeSet(std::move(out));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

Graph Graph::complement() const {
  Graph out(names_);
  for (VertexId v = 0; v < size(); ++v) {
    out.adj_[v] = ~adj_[v];
    out.adj_[v].reset(v);
  }
  return out;
}

bool is_clique(const Graph& g, const Bitset& vertices) {
  bool ok = true;
  for_each_bit(vertices, [&](VertexId v) {
    if (!ok) return;
    Bitset others = vertices;
    others.reset(v);
    ok = others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

bool is_peo(const Graph& g, std::span<const VertexId> order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  // Parent test: the later neighbours of v minus its earliest later
  // neighbour p must all be adjacent to p.
  Bitset later(n);
  for (std::size_t i = n; i-- > 0;) {
    VertexId v = order[i];
    Bitset succ = g.neighbors(v) & later;
    if (succ.any()) {
      VertexId parent = static_cast<VertexId>(succ.find_first());
      for_each_bit(succ, [&](VertexId w) {
        if (position[w] < position[parent]) parent = w;
      });
      succ.reset(parent);
      if (!succ.is_subset_of(g.neighbors(parent))) return false;
    }
    later.set(v);
  }
  return true;
}

std::optional<Peo> find_peo(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  Peo peo;
  peo.order.assign(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = n; v-- > 0;) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    peo.order[n - 1 - step] = static_cast<VertexId>(best);
    for_each_bit(g.neighbors(static_cast<VertexId>(best)), [&](VertexId w) {
      if (!numbered[w]) ++weight[w];
    });
  }
  if (!is_peo(g, peo.order)) return std::nullopt;
  return peo;
}

bool is_chordal(const Graph& g) { return find_peo(g).has_value(); }

bool is_transitive(const DirectedEdgeSet& t) {
  std::size_t n = 0;
  for (const Arc& a : t) n = std::max<std::size_t>(n, std::max(a.tail, a.head) + 1);
  std::vector<Bitset> out(n, Bitset(n));
  for (const Arc& a : t) {
    if (a.tail == a.head) return false;
    out[a.tail].set(a.head);
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    for_each_bit(out[a], [&](VertexId b) {
      if (ok && !out[b].is_subset_of(out[a])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace simgraph
