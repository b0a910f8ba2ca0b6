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

#include "simgraph/chordal.hpp"

#include <limits>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

// Scratch for one run of the elimination loop. Vertices die by clearing
// their bit in `alive`; the instance itself is never touched.
class Eliminator {
 public:
  Eliminator(const SharedInstance& inst, const EdgeSet& f, Bitset alive)
      : inst_(inst), fill_(inst.size(), Bitset(inst.size())), alive_(std::move(alive)) {
    for (const Edge& e : f) add_fill(e);
    for (Side s : kBothSides) {
      peo_[index_of(s)] = host_peo(inst, s);
      if (const auto& p = peo_[index_of(s)]) {
        auto& pos = position_[index_of(s)];
        pos.assign(inst.size(), std::numeric_limits<std::size_t>::max());
        for (std::size_t i = 0; i < p->order.size(); ++i) pos[p->order[i]] = i;
      }
    }
  }

  const Bitset& alive() const { return alive_; }

  NeighborSplit split(VertexId v) const {
    Bitset all = inst_.neighbors(Side::kFirst, v) | inst_.neighbors(Side::kSecond, v) | fill_[v];
    all &= alive_;
    return {all & inst_.side_set(Side::kFirst), all & inst_.side_set(Side::kSecond)};
  }

  bool clique(Side host, const Bitset& s) const {
    if (s.count() <= 1) return true;
    const auto& adj = inst_.adjacency(host);
    if (!peo_[index_of(host)]) return is_clique_pairwise(adj, s);
    const auto& pos = position_[index_of(host)];
    VertexId first = static_cast<VertexId>(s.find_first());
    for_each_bit(s, [&](VertexId w) {
      if (pos[w] < pos[first]) first = w;
    });
    Bitset rest = s;
    rest.reset(first);
    return rest.is_subset_of(adj[first]);
  }

  bool eliminable(VertexId v) const {
    NeighborSplit n = split(v);
    return clique(Side::kFirst, n.first) && clique(Side::kSecond, n.second);
  }

  std::optional<VertexId> pick(TieBreak tie_break) const {
    if (tie_break == TieBreak::kSmallestId) {
      for (auto v = alive_.find_first(); v != Bitset::npos; v = alive_.find_next(v)) {
        if (eliminable(static_cast<VertexId>(v))) return static_cast<VertexId>(v);
      }
      return std::nullopt;
    }
    for (std::size_t v = inst_.size(); v-- > 0;) {
      if (alive_.test(v) && eliminable(static_cast<VertexId>(v))) return static_cast<VertexId>(v);
    }
    return std::nullopt;
  }

  EdgeSet fill_of(VertexId v) const {
    NeighborSplit n = split(v);
    Bitset left = n.first - inst_.shared_set();
    Bitset right = n.second - inst_.shared_set();
    std::vector<Edge> out;
    for_each_bit(left, [&](VertexId x) {
      for_each_bit(right, [&](VertexId y) { out.push_back(Edge::of(x, y)); });
    });
    return EdgeSet(std::move(out));
  }

  void eliminate(VertexId v, EdgeSet& accumulated) {
    for (const Edge& e : fill_of(v)) {
      if (accumulated.insert(e)) add_fill(e);
    }
    alive_.reset(v);
  }

 private:
  static bool is_clique_pairwise(const std::vector<Bitset>& adj, const Bitset& s) {
    bool ok = true;
    for_each_bit(s, [&](VertexId v) {
      if (!ok) return;
      Bitset rest = s;
      rest.reset(v);
      ok = rest.is_subset_of(adj[v]);
    });
    return ok;
  }

  void add_fill(Edge e) {
    fill_[e.u].set(e.v);
    fill_[e.v].set(e.u);
  }

  const SharedInstance& inst_;
  std::vector<Bitset> fill_;
  Bitset alive_;
  std::array<std::optional<Peo>, 2> peo_;
  std::array<std::vector<std::size_t>, 2> position_;
};

void check_vertex(const SharedInstance& inst, VertexId v) {
  if (v >= inst.size()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex id " + std::to_string(v));
  }
}

}  // namespace

NeighborSplit neighbors_split(VertexId v, const SharedInstance& inst, const EdgeSet& f,
                              const Bitset& alive) {
  check_vertex(inst, v);
  return Eliminator(inst, f, alive).split(v);
}

NeighborSplit neighbors_split(VertexId v, const SharedInstance& inst, const EdgeSet& f) {
  return neighbors_split(v, inst, f, inst.all_vertices());
}

std::optional<Peo> host_peo(const SharedInstance& inst, Side host) {
  auto local = find_peo(inst.graph(host));
  if (!local) return std::nullopt;
  std::vector<VertexId> ids = to_vector(inst.side_set(host));
  Peo peo;
  peo.order.reserve(local->order.size());
  for (VertexId v : local->order) peo.order.push_back(ids[v]);
  return peo;
}

bool is_clique_in(Side host, const Bitset& s, const SharedInstance& inst,
                  const std::optional<Peo>& peo) {
  if (s.count() <= 1) return true;
  const auto& adj = inst.adjacency(host);
  if (!peo) {
    bool ok = true;
    for_each_bit(s, [&](VertexId v) {
      if (!ok) return;
      Bitset rest = s;
      rest.reset(v);
      ok = rest.is_subset_of(adj[v]);
    });
    return ok;
  }
  for (VertexId v : peo->order) {
    if (v < s.size() && s.test(v)) {
      Bitset rest = s;
      rest.reset(v);
      return rest.is_subset_of(adj[v]);
    }
  }
  return true;
}

std::optional<VertexId> s_elimination_vertex(const SharedInstance& inst, const EdgeSet& f,
                                             const Bitset& alive, TieBreak tie_break) {
  return Eliminator(inst, f, alive).pick(tie_break);
}

EdgeSet fill_edges(VertexId v, const SharedInstance& inst, const EdgeSet& f,
                   const Bitset& alive) {
  check_vertex(inst, v);
  return Eliminator(inst, f, alive).fill_of(v);
}

ChordalResult recognize_simultaneous_chordal(const SharedInstance& inst,
                                             const ChordalOptions& options) {
  EdgeSet accumulated = inst.forced();
  Eliminator state(inst, accumulated, inst.all_vertices());
  std::vector<VertexId> order;
  order.reserve(inst.size());
  while (auto v = state.pick(options.tie_break)) {
    state.eliminate(*v, accumulated);
    order.push_back(*v);
  }
  if (state.alive().any()) {
    return ChordalDiagnostic{state.alive(), std::move(accumulated)};
  }
  return ChordalCertificate{std::move(accumulated), std::move(order)};
}

bool verify_chordal_certificate(const SharedInstance& inst, const ChordalCertificate& cert) {
  if (!cert.augmenting.includes(inst.forced())) return false;
  for (const Edge& e : cert.augmenting) {
    if (e.u >= inst.size() || e.v >= inst.size() || !inst.is_augmenting_pair(e.u, e.v)) {
      return false;
    }
  }
  // A valid elimination order is itself the proof of chordality.
  return is_peo(union_graph(inst, cert.augmenting), cert.elimination_order);
}

bool verify_chordal_diagnostic(const SharedInstance& inst, const ChordalDiagnostic& diag) {
  if (diag.residual_vertices.size() != inst.size() || diag.residual_vertices.none()) return false;
  if (!diag.accumulated_f.includes(inst.forced())) return false;
  for (const Edge& e : diag.accumulated_f) {
    if (e.u >= inst.size() || e.v >= inst.size() || !inst.is_augmenting_pair(e.u, e.v)) {
      return false;
    }
  }
  Eliminator state(inst, diag.accumulated_f, diag.residual_vertices);
  return !state.pick(TieBreak::kSmallestId).has_value();
}

}  // namespace simgraph
