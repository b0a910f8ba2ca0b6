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

#include "simgraph/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

// Word-per-vertex adjacency for graphs of at most 64 vertices.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;

  explicit SmallGraph(std::size_t size) : n(size), adj(size, 0) {}

  bool adjacent(std::size_t u, std::size_t v) const { return adj[u] & bit(v); }
  void connect(std::size_t u, std::size_t v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  SmallGraph complement() const {
    SmallGraph out(n);
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    for (std::size_t v = 0; v < n; ++v) out.adj[v] = all & ~adj[v] & ~bit(v);
    return out;
  }
};

SmallGraph to_small(const Graph& g) {
  if (g.size() > 64) throw Error(ErrorCode::kBudgetExceeded, "oracle handles at most 64 vertices");
  SmallGraph out(g.size());
  for (const Edge& e : g.edges()) out.connect(e.u, e.v);
  return out;
}

template <typename Fn>
void for_each_mask_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Extends the induced path `path` (first vertex `start`, all others larger)
// looking for a chordless cycle of length >= 4 through `start`.
bool chordless_from(const SmallGraph& g, std::vector<std::size_t>& path, Mask on_path,
                    std::size_t start) {
  const std::size_t last = path.back();
  const Mask interior = on_path & ~bit(start) & ~bit(last);
  const Mask above = ~(bit(start + 1) - 1);
  Mask candidates = g.adj[last] & above & ~on_path;
  while (candidates) {
    const std::size_t w = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    if (g.adj[w] & interior) continue;
    if (g.adjacent(w, start)) {
      if (path.size() >= 3) return true;
      continue;
    }
    path.push_back(w);
    if (chordless_from(g, path, on_path | bit(w), start)) return true;
    path.pop_back();
  }
  return false;
}

bool is_chordal_small(const SmallGraph& g) {
  if (g.n > kMaxChordalOracleVertices) {
    throw Error(ErrorCode::kBudgetExceeded, "chordless-cycle search is capped at " +
                                                std::to_string(kMaxChordalOracleVertices) +
                                                " vertices");
  }
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < g.n; ++s) {
    Mask later = g.adj[s] & ~(bit(s + 1) - 1);
    while (later) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(later));
      later &= later - 1;
      path.assign({s, v});
      if (chordless_from(g, path, bit(s) | bit(v), s)) return false;
    }
  }
  return true;
}

// Depth-first search over orientations, one edge at a time. A partial
// orientation is abandoned as soon as some a->b->c has a-c missing from the
// graph or oriented c->a.
class OrientationSearch {
 public:
  OrientationSearch(const SmallGraph& g, std::uint64_t node_budget)
      : g_(g), out_(g.n, 0), in_(g.n, 0), budget_(node_budget) {
    // Breadth-first edge order keeps consecutive edges close, so conflicts
    // surface early.
    std::vector<char> taken(g.n * g.n, 0);
    for (std::size_t root = 0; root < g.n; ++root) {
      std::vector<std::size_t> queue{root};
      std::vector<char> seen(g.n, 0);
      seen[root] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const std::size_t u = queue[h];
        for_each_mask_bit(g.adj[u], [&](std::size_t v) {
          const std::size_t lo = std::min(u, v);
          const std::size_t hi = std::max(u, v);
          if (!taken[lo * g.n + hi]) {
            taken[lo * g.n + hi] = 1;
            edges_.push_back({lo, hi});
          }
          if (!seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
          }
        });
      }
    }
  }

  bool run() { return place(0); }

 private:
  bool consistent(std::size_t u, std::size_t v) const {
    // w -> u -> v needs w -> v.
    bool ok = true;
    for_each_mask_bit(in_[u], [&](std::size_t w) {
      if (!g_.adjacent(w, v) || (out_[v] & bit(w))) ok = false;
    });
    if (!ok) return false;
    // u -> v -> w needs u -> w.
    for_each_mask_bit(out_[v], [&](std::size_t w) {
      if (!g_.adjacent(u, w) || (in_[u] & bit(w))) ok = false;
    });
    return ok;
  }

  bool place(std::size_t k) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded, "orientation search exceeded its node budget");
    }
    if (k == edges_.size()) return true;
    const auto [a, b] = edges_[k];
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!consistent(u, v)) continue;
      out_[u] |= bit(v);
      in_[v] |= bit(u);
      if (place(k + 1)) return true;
      out_[u] &= ~bit(v);
      in_[v] &= ~bit(u);
    }
    return false;
  }

  const SmallGraph& g_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

bool comparability_small(const SmallGraph& g, const OracleBudget& budget) {
  return OrientationSearch(g, budget.max_orientations).run();
}

// Grows L one vertex at a time. For u placed before w in L, P must put u
// before w exactly when u-w is a non-edge; the prefix stays feasible while
// that relation has no directed triangle.
class OrderSearch {
 public:
  explicit OrderSearch(const SmallGraph& g) : g_(g), before_(g.n, 0) {}

  bool run() { return grow(0); }

 private:
  // In P, does u come before v (u placed earlier in L)?
  bool p_before(std::size_t u, std::size_t v) const { return !g_.adjacent(u, v); }

  bool grow(Mask placed) {
    if (std::popcount(placed) == static_cast<int>(g_.n)) return true;
    for (std::size_t w = 0; w < g_.n; ++w) {
      if (placed & bit(w)) continue;
      // P-successors / predecessors of w among the placed vertices.
      Mask after_w = 0;
      Mask before_w = 0;
      for_each_mask_bit(placed, [&](std::size_t u) {
        if (p_before(u, w)) before_w |= bit(u); else after_w |= bit(u);
      });
      // A cycle u <P v <P w <P u needs u in after_w, v in before_w, u before v.
      bool ok = true;
      for_each_mask_bit(after_w, [&](std::size_t u) {
        if (before_[u] & before_w) ok = false;
      });
      if (!ok) continue;
      for_each_mask_bit(before_w, [&](std::size_t u) { before_[u] |= bit(w); });
      for_each_mask_bit(after_w, [&](std::size_t u) { before_[w] |= bit(u); });
      const bool found = grow(placed | bit(w));
      for_each_mask_bit(before_w, [&](std::size_t u) { before_[u] &= ~bit(w); });
      before_[w] = 0;
      if (found) return true;
    }
    return false;
  }

  const SmallGraph& g_;
  // before_[u]: vertices placed so far that P puts after u.
  std::vector<Mask> before_;
};

bool permutation_small(const SmallGraph& g, const OracleBudget& budget) {
  std::optional<bool> by_orders;
  if (g.n <= budget.max_factorial_n) by_orders = OrderSearch(g).run();
  std::optional<bool> by_complement;
  try {
    by_complement = comparability_small(g, budget) && comparability_small(g.complement(), budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded || !by_orders) throw;
  }
  if (!by_orders && !by_complement) {
    throw Error(ErrorCode::kBudgetExceeded, "permutation oracle has no route within budget");
  }
  if (by_orders && by_complement && *by_orders != *by_complement) {
    throw std::logic_error("permutation oracle routes disagree");
  }
  return by_orders ? *by_orders : *by_complement;
}

bool member_small(const SmallGraph& g, GraphClass cls, const OracleBudget& budget) {
  switch (cls) {
    case GraphClass::kChordal: return is_chordal_small(g);
    case GraphClass::kComparability: return comparability_small(g, budget);
    case GraphClass::kPermutation: return permutation_small(g, budget);
  }
  return false;
}

}  // namespace

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::kChordal: return "chordal";
    case GraphClass::kComparability: return "comparability";
    case GraphClass::kPermutation: return "permutation";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view text) {
  if (text == "chordal") return GraphClass::kChordal;
  if (text == "comparability") return GraphClass::kComparability;
  if (text == "permutation") return GraphClass::kPermutation;
  return std::nullopt;
}

bool oracle_member(const Graph& g, GraphClass cls, const OracleBudget& budget) {
  return member_small(to_small(g), cls, budget);
}

bool oracle_comparability(const Graph& g, const OracleBudget& budget) {
  return comparability_small(to_small(g), budget);
}

bool oracle_permutation_by_complement(const Graph& g, const OracleBudget& budget) {
  SmallGraph small = to_small(g);
  return comparability_small(small, budget) && comparability_small(small.complement(), budget);
}

bool oracle_permutation_by_orders(const Graph& g, const OracleBudget& budget) {
  if (g.size() > budget.max_factorial_n) {
    throw Error(ErrorCode::kBudgetExceeded, "ordering search is capped at " +
                                                std::to_string(budget.max_factorial_n) +
                                                " vertices");
  }
  return OrderSearch(to_small(g)).run();
}

bool oracle_simultaneous(const SharedInstance& inst, GraphClass cls, const OracleBudget& budget) {
  if (cls != GraphClass::kChordal && !inst.forced().empty()) {
    throw Error(ErrorCode::kForcedNotSupported,
                "forced edges are only supported for chordal recognition");
  }
  if (inst.size() > 64) throw Error(ErrorCode::kBudgetExceeded, "oracle handles at most 64 vertices");
  std::vector<Edge> optional_pairs;
  for (const Edge& e : augmenting_pairs(inst)) {
    if (!inst.forced().contains(e)) optional_pairs.push_back(e);
  }
  if (optional_pairs.size() >= 63 ||
      (std::uint64_t{1} << optional_pairs.size()) > budget.max_subsets) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(optional_pairs.size()) + " optional pairs exceed the subset budget");
  }
  SmallGraph base(inst.size());
  for (const Edge& e : inst.all_edges()) base.connect(e.u, e.v);
  for (const Edge& e : inst.forced()) base.connect(e.u, e.v);
  const std::uint64_t subsets = std::uint64_t{1} << optional_pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    SmallGraph g = base;
    for (std::size_t i = 0; i < optional_pairs.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) g.connect(optional_pairs[i].u, optional_pairs[i].v);
    }
    if (member_small(g, cls, budget)) return true;
  }
  return false;
}

}  // namespace simgraph
