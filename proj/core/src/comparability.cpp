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

#include "simgraph/comparability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

// Directed edges of a (one- or two-sided) edge relation, indexed so that
// arc 2k is edge k oriented low -> high and arc 2k+1 the reverse.
class ArcSpace {
 public:
  ArcSpace(std::size_t n, std::array<const std::vector<Bitset>*, 2> adj)
      : n_(n), adj_(adj), pair_(n * n, -1) {
    for (VertexId u = 0; u < n; ++u) {
      for (int s = 0; s < 2; ++s) {
        if (!adj_[s]) continue;
        for_each_bit((*adj_[s])[u], [&](VertexId v) {
          if (u >= v) return;
          int& e = pair_[u * n_ + v];
          if (e < 0) {
            e = static_cast<int>(edges_.size());
            pair_[v * n_ + u] = e;
            edges_.push_back({u, v});
            sides_.push_back(0);
          }
          sides_[e] |= static_cast<std::uint8_t>(1u << s);
        });
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return 2 * edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  Arc arc(int id) const {
    const Edge& e = edges_[id / 2];
    return (id & 1) ? Arc{e.v, e.u} : Arc{e.u, e.v};
  }
  int id(VertexId tail, VertexId head) const {
    int e = pair_[tail * n_ + head];
    if (e < 0) return -1;
    return 2 * e + (tail > head ? 1 : 0);
  }
  int id(Arc a) const { return id(a.tail, a.head); }
  std::uint8_t sides(int arc_id) const { return sides_[arc_id / 2]; }
  const std::vector<Bitset>& adjacency(int side) const { return *adj_[side]; }

  // Calls fn(other_arc, side, nonedge) for every Γ' partner of `arc_id`.
  template <typename Fn>
  void for_each_partner(int arc_id, Fn&& fn) const {
    const Arc a = arc(arc_id);
    for (int s = 0; s < 2; ++s) {
      if (!(sides(arc_id) & (1u << s))) continue;
      const auto& adj = *adj_[s];
      Bitset heads = adj[a.tail] - adj[a.head];
      heads.reset(a.head);
      for_each_bit(heads, [&](VertexId j) { fn(id(a.tail, j), s, Edge::of(a.head, j)); });
      Bitset tails = adj[a.head] - adj[a.tail];
      tails.reset(a.tail);
      for_each_bit(tails, [&](VertexId i) { fn(id(i, a.head), s, Edge::of(a.tail, i)); });
    }
  }

  DirectedEdgeSet to_set(const std::vector<int>& ids) const {
    std::vector<Arc> arcs;
    arcs.reserve(ids.size());
    for (int i : ids) arcs.push_back(arc(i));
    return DirectedEdgeSet(std::move(arcs));
  }

 private:
  std::size_t n_;
  std::array<const std::vector<Bitset>*, 2> adj_;
  std::vector<int> pair_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> sides_;
};

struct Closure {
  std::vector<int> class_of;
  std::vector<std::vector<int>> members;  // each sorted
};

// Breadth-first Γ' closure, classes seeded in increasing arc order.
Closure close_classes(const ArcSpace& space) {
  Closure out;
  out.class_of.assign(space.arc_count(), -1);
  std::vector<int> queue;
  for (int seed = 0; seed < static_cast<int>(space.arc_count()); ++seed) {
    if (out.class_of[seed] >= 0) continue;
    const int c = static_cast<int>(out.members.size());
    out.members.emplace_back();
    queue.assign(1, seed);
    out.class_of[seed] = c;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      space.for_each_partner(queue[head], [&](int other, int, Edge) {
        if (out.class_of[other] < 0) {
          out.class_of[other] = c;
          queue.push_back(other);
        }
      });
    }
    std::sort(queue.begin(), queue.end());
    out.members.back() = queue;
  }
  return out;
}

// Shortest Γ' chain from `conflict` to its reverse.
ForcingWitness build_witness(const ArcSpace& space, const std::vector<int>& members) {
  std::vector<int> in_class(space.arc_count(), 0);
  for (int m : members) in_class[m] = 1;
  int conflict = -1;
  for (int m : members) {
    if (in_class[m ^ 1]) {
      conflict = m;
      break;
    }
  }
  struct Link {
    int prev = -1;
    int side = 0;
    Edge nonedge;
  };
  std::vector<Link> link(space.arc_count());
  std::vector<char> seen(space.arc_count(), 0);
  std::deque<int> queue{conflict};
  seen[conflict] = 1;
  const int target = conflict ^ 1;
  while (!queue.empty() && !seen[target]) {
    int cur = queue.front();
    queue.pop_front();
    space.for_each_partner(cur, [&](int other, int side, Edge nonedge) {
      if (seen[other]) return;
      seen[other] = 1;
      link[other] = {cur, side, nonedge};
      queue.push_back(other);
    });
  }
  ForcingWitness w;
  w.class_edges = space.to_set(members);
  w.conflict = space.arc(conflict);
  for (int cur = target; cur != conflict; cur = link[cur].prev) {
    const Link& l = link[cur];
    w.chain.push_back({space.arc(l.prev), space.arc(cur),
                       l.side == 0 ? Side::kFirst : Side::kSecond, l.nonedge});
  }
  std::reverse(w.chain.begin(), w.chain.end());
  return w;
}

bool self_inverse_free(const Closure& closure, int c) {
  for (int m : closure.members[c]) {
    if (closure.class_of[m ^ 1] == c) return false;
  }
  return true;
}

ArcSpace space_of(const SharedInstance& inst) {
  return ArcSpace(inst.size(), {&inst.adjacency(Side::kFirst), &inst.adjacency(Side::kSecond)});
}

ClassKind kind_of(const ArcSpace& space, const std::vector<int>& members) {
  bool first = false;
  for (int m : members) {
    const auto s = space.sides(m);
    if (s == 3) return ClassKind::kSuper;
    first = first || (s & 1);
  }
  return first ? ClassKind::kBase1 : ClassKind::kBase2;
}

std::vector<Bitset> out_rows(const DirectedEdgeSet& t, std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (const Arc& a : t) rows[a.tail].set(a.head);
  return rows;
}

bool rows_transitive(const std::vector<Bitset>& rows) {
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].test(a)) return false;
    bool ok = true;
    for_each_bit(rows[a], [&](VertexId b) {
      if (ok && !rows[b].is_subset_of(rows[a])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// t orients every edge of E1 ∪ E2 exactly once and nothing else.
bool orients_union_once(const SharedInstance& inst, const DirectedEdgeSet& t) {
  for (const Arc& a : t) {
    if (a.tail >= inst.size() || a.head >= inst.size() || !inst.has_edge(a.tail, a.head)) {
      return false;
    }
    if (t.contains(a.reversed())) return false;
  }
  return t.size() == inst.all_edges().size();
}

bool pseudo_transitive(const SharedInstance& inst, const DirectedEdgeSet& t) {
  for (Side s : kBothSides) {
    if (!rows_transitive(out_rows(t.restricted_to(inst.side_set(s)), inst.size()))) return false;
  }
  return true;
}

// Union-find over arc ids with a circular member list per set and a label
// on each root.
class ClassForest {
 public:
  explicit ClassForest(std::size_t arcs)
      : parent_(arcs), next_(arcs), size_(arcs, 1), label_(arcs, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(next_.begin(), next_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  int unite(int a, int b, int label) {
    a = find(a);
    b = find(b);
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      std::swap(next_[a], next_[b]);
    }
    label_[a] = label;
    return a;
  }

  int label(int x) { return label_[find(x)]; }
  void set_label(int x, int label) { label_[find(x)] = label; }

  std::vector<int> members(int x) {
    std::vector<int> out{x};
    for (int y = next_[x]; y != x; y = next_[y]) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> next_;
  std::vector<int> size_;
  std::vector<int> label_;
};

}  // namespace

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::kBase1: return "Base1";
    case ClassKind::kBase2: return "Base2";
    case ClassKind::kSuper: return "Super";
  }
  return "?";
}

bool EdgeClass::disjoint_from_inverse() const {
  for (const Arc& a : edges) {
    if (edges.contains(a.reversed())) return false;
  }
  return true;
}

bool gamma_related(Arc e, Arc f, const Graph& g) {
  auto is_edge = [&](Arc a) {
    return a.tail < g.size() && a.head < g.size() && a.tail != a.head && g.adjacent(a.tail, a.head);
  };
  if (!is_edge(e) || !is_edge(f)) throw Error(ErrorCode::kNotAnEdge, "gamma needs two edges");
  if (e == f) return true;
  if (e.tail == f.tail) return !g.adjacent(e.head, f.head);
  if (e.head == f.head) return !g.adjacent(e.tail, f.tail);
  return false;
}

std::vector<DirectedEdgeSet> implication_classes(const Graph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.size());
  for (VertexId v = 0; v < g.size(); ++v) rows.push_back(g.neighbors(v));
  ArcSpace space(g.size(), {&rows, nullptr});
  Closure closure = close_classes(space);
  std::vector<DirectedEdgeSet> out;
  out.reserve(closure.members.size());
  for (const auto& m : closure.members) out.push_back(space.to_set(m));
  return out;
}

std::vector<EdgeClass> composite_classes(const SharedInstance& inst) {
  ArcSpace space = space_of(inst);
  Closure closure = close_classes(space);
  std::vector<int> label(closure.members.size(), 0);
  int next_label = 1;
  std::vector<EdgeClass> out;
  out.reserve(closure.members.size());
  for (std::size_t c = 0; c < closure.members.size(); ++c) {
    const auto& m = closure.members[c];
    ClassKind kind = kind_of(space, m);
    if (kind != ClassKind::kSuper && label[c] == 0) {
      const int inv = closure.class_of[m.front() ^ 1];
      label[c] = next_label;
      if (inv != static_cast<int>(c)) label[inv] = -next_label;
      ++next_label;
    }
    out.push_back({space.to_set(m), kind, label[c]});
  }
  return out;
}

SDecompositionResult s_decomposition(const SharedInstance& inst) {
  ArcSpace space = space_of(inst);
  Closure closure = close_classes(space);
  for (std::size_t c = 0; c < closure.members.size(); ++c) {
    if (!self_inverse_free(closure, static_cast<int>(c))) {
      return build_witness(space, closure.members[c]);
    }
  }

  const int arcs = static_cast<int>(space.arc_count());
  ClassForest forest(space.arc_count());
  int next_label = 1;
  std::vector<int> seed_label(closure.members.size(), 0);
  for (std::size_t c = 0; c < closure.members.size(); ++c) {
    const auto& m = closure.members[c];
    for (int a : m) forest.unite(m.front(), a, 0);
    if (kind_of(space, m) != ClassKind::kSuper && seed_label[c] == 0) {
      seed_label[c] = next_label;
      seed_label[closure.class_of[m.front() ^ 1]] = -next_label;
      ++next_label;
    }
  }
  for (std::size_t c = 0; c < closure.members.size(); ++c) {
    forest.set_label(closure.members[c].front(), seed_label[c]);
  }

  std::vector<char> deleted(space.arc_count(), 0);
  std::vector<Bitset> live(inst.size(), Bitset(inst.size()));
  for (const Edge& e : space.edges()) {
    live[e.u].set(e.v);
    live[e.v].set(e.u);
  }

  // Deletes the class (and its inverse) and merges the classes that the
  // deletion brings into relation.
  auto remove_class = [&](const std::vector<int>& members) {
    for (int a : members) {
      deleted[a] = deleted[a ^ 1] = 1;
      const Edge& e = space.edges()[a / 2];
      live[e.u].reset(e.v);
      live[e.v].reset(e.u);
    }
    for (int id : members) {
      const Arc bc = space.arc(id);
      Bitset apex = live[bc.tail] & live[bc.head];
      for_each_bit(apex, [&](VertexId a) {
        const int ab = space.id(a, bc.tail);
        const int ac = space.id(a, bc.head);
        const int root_ab = forest.find(ab);
        const int root_ac = forest.find(ac);
        if (root_ab == root_ac) return;
        if (root_ab == forest.find(ac ^ 1)) {
          throw Error(ErrorCode::kInternal, "class deletion merged a class with its inverse");
        }
        const int l_ab = forest.label(root_ab);
        const int l_ac = forest.label(root_ac);
        const int l = (l_ab == 0 || l_ac == 0) ? 0 : l_ab;
        forest.unite(ab, ac, l);
        forest.unite(ab ^ 1, ac ^ 1, -l);
      });
    }
  };

  auto extract = [&](int seed, ClassKind kind) {
    const int root = forest.find(seed);
    EdgeClass cls;
    cls.label = forest.label(root);
    std::vector<int> members = forest.members(root);
    cls.edges = space.to_set(members);
    cls.kind = kind == ClassKind::kSuper ? kind : kind_of(space, members);
    if (!cls.disjoint_from_inverse()) {
      throw Error(ErrorCode::kInternal, "extracted class meets its inverse");
    }
    remove_class(members);
    return cls;
  };

  SDecomposition out;
  int cursor = 0;
  for (;;) {
    while (cursor < arcs && (deleted[cursor] || forest.label(cursor) == 0)) ++cursor;
    if (cursor == arcs) break;
    out.bases.push_back(extract(cursor, ClassKind::kBase1));
  }
  cursor = 0;
  for (;;) {
    while (cursor < arcs && deleted[cursor]) ++cursor;
    if (cursor == arcs) break;
    out.supers.push_back(extract(cursor, ClassKind::kSuper));
  }
  return out;
}

Completion complete_orientation(const DirectedEdgeSet& t, const SharedInstance& inst) {
  if (!orients_union_once(inst, t) || !pseudo_transitive(inst, t)) {
    throw Error(ErrorCode::kNotPseudoTransitive,
                "orientation is not a pseudo-transitive orientation of E1 ∪ E2");
  }
  const std::size_t n = inst.size();
  std::vector<Bitset> rows = out_rows(t, n);
  std::vector<Arc> added;
  for (Side s : kBothSides) {
    const Bitset targets = inst.private_set(other(s));
    for_each_bit(inst.private_set(s), [&](VertexId a) {
      Bitset reach(n);
      for_each_bit(rows[a] & inst.shared_set(), [&](VertexId b) { reach |= rows[b]; });
      reach &= targets;
      for_each_bit(reach, [&](VertexId c) { added.push_back({a, c}); });
    });
  }
  Completion out;
  out.a_prime = DirectedEdgeSet(std::move(added));
  out.t_full = t.united(out.a_prime);
  if (!rows_transitive(out_rows(out.t_full, n))) {
    throw Error(ErrorCode::kCompletionFailure, "completed orientation is not transitive");
  }
  return out;
}

ComparabilityResult pseudo_transitive_orientation(const SharedInstance& inst) {
  SDecompositionResult decomposition = s_decomposition(inst);
  if (auto* w = std::get_if<ForcingWitness>(&decomposition)) return std::move(*w);
  const auto& d = std::get<SDecomposition>(decomposition);
  std::vector<Arc> arcs;
  for (const auto* list : {&d.bases, &d.supers}) {
    for (const EdgeClass& c : *list) arcs.insert(arcs.end(), c.edges.begin(), c.edges.end());
  }
  ComparabilityCertificate cert;
  cert.t = DirectedEdgeSet(std::move(arcs));
  Completion completion = complete_orientation(cert.t, inst);
  cert.t_full = std::move(completion.t_full);
  cert.a_prime = std::move(completion.a_prime);
  return cert;
}

ComparabilityResult recognize_simultaneous_comparability(const SharedInstance& inst) {
  if (!inst.forced().empty()) {
    throw Error(ErrorCode::kForcedNotSupported,
                "forced edges are only supported for chordal recognition");
  }
  return pseudo_transitive_orientation(inst);
}

bool verify_comparability_certificate(const SharedInstance& inst,
                                      const ComparabilityCertificate& cert) {
  if (!orients_union_once(inst, cert.t) || !pseudo_transitive(inst, cert.t)) return false;
  for (const Edge& e : inst.shared_edges()) {
    const bool forward = cert.t.contains({e.u, e.v});
    const bool backward = cert.t.contains({e.v, e.u});
    if (forward == backward) return false;
  }
  for (const Arc& a : cert.a_prime) {
    if (a.tail >= inst.size() || a.head >= inst.size() || !inst.is_augmenting_pair(a.tail, a.head)) {
      return false;
    }
    if (cert.a_prime.contains(a.reversed())) return false;
  }
  if (cert.t_full != cert.t.united(cert.a_prime)) return false;
  return rows_transitive(out_rows(cert.t_full, inst.size()));
}

bool verify_forcing_witness(const SharedInstance& inst, const ForcingWitness& witness) {
  const auto& chain = witness.chain;
  if (chain.empty()) return false;
  if (chain.front().from != witness.conflict) return false;
  if (chain.back().to != witness.conflict.reversed()) return false;
  const std::size_t n = inst.size();
  auto is_side_edge = [&](Side s, Arc a) {
    return a.tail < n && a.head < n && a.tail != a.head && inst.has_edge(s, a.tail, a.head);
  };
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const ForcingStep& step = chain[k];
    if (k > 0 && chain[k - 1].to != step.from) return false;
    if (!is_side_edge(step.side, step.from) || !is_side_edge(step.side, step.to)) return false;
    Edge expected;
    if (step.from.tail == step.to.tail && step.from.head != step.to.head) {
      expected = Edge::of(step.from.head, step.to.head);
    } else if (step.from.head == step.to.head && step.from.tail != step.to.tail) {
      expected = Edge::of(step.from.tail, step.to.tail);
    } else {
      return false;
    }
    if (Edge::of(step.nonedge.u, step.nonedge.v) != expected) return false;
    if (inst.has_edge(step.side, expected.u, expected.v)) return false;
  }
  if (!witness.class_edges.empty()) {
    for (const ForcingStep& step : chain) {
      if (!witness.class_edges.contains(step.from) || !witness.class_edges.contains(step.to)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace simgraph
