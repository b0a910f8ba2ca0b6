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

#include "simgraph/permutation.hpp"

#include <queue>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

std::vector<VertexId> topological_order(const std::vector<Arc>& arcs,
                                        std::span<const VertexId> vertices,
                                        std::size_t universe) {
  Bitset member = to_bitset(vertices, universe);
  std::vector<std::vector<VertexId>> out(universe);
  std::vector<std::size_t> indegree(universe, 0);
  for (const Arc& a : arcs) {
    if (!member.test(a.tail) || !member.test(a.head)) continue;
    out[a.tail].push_back(a.head);
    ++indegree[a.head];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for_each_bit(member, [&](VertexId v) {
    if (indegree[v] == 0) ready.push(v);
  });
  std::vector<VertexId> order;
  order.reserve(member.count());
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != member.count()) {
    throw Error(ErrorCode::kCyclicUnion, "orientation union contains a directed cycle");
  }
  return order;
}

std::vector<std::size_t> positions(std::span<const VertexId> order, std::size_t universe) {
  std::vector<std::size_t> pos(universe, universe);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

bool is_permutation_of(std::span<const VertexId> order, std::size_t universe) {
  if (order.size() != universe) return false;
  std::vector<char> seen(universe, 0);
  for (VertexId v : order) {
    if (v >= universe || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

std::vector<Segment> PermutationCertificate::segments() const {
  const std::size_t n = global_pair.l.size();
  auto top = positions(global_pair.l, n);
  auto bottom = positions(global_pair.p, n);
  std::vector<Segment> out;
  out.reserve(n);
  for (VertexId v = 0; v < n; ++v) out.push_back({v, top[v] + 1, bottom[v] + 1});
  return out;
}

OrderPair build_order_pair(const DirectedEdgeSet& f, const DirectedEdgeSet& r,
                           std::span<const VertexId> vertices) {
  std::size_t universe = 0;
  for (VertexId v : vertices) universe = std::max<std::size_t>(universe, v + 1);
  std::vector<Arc> forward(f.begin(), f.end());
  std::vector<Arc> backward;
  backward.reserve(f.size() + r.size());
  for (const Arc& a : f) backward.push_back(a.reversed());
  for (const Arc& a : r) {
    forward.push_back(a);
    backward.push_back(a);
  }
  for (const Arc& a : forward) universe = std::max<std::size_t>(universe, std::max(a.tail, a.head) + 1);
  return {topological_order(forward, vertices, universe),
          topological_order(backward, vertices, universe)};
}

std::vector<VertexId> merge_orders(std::span<const VertexId> o1, std::span<const VertexId> o2,
                                   const Bitset& shared) {
  auto is_shared = [&](VertexId v) { return v < shared.size() && shared.test(v); };
  std::vector<VertexId> out;
  out.reserve(o1.size() + o2.size());
  std::size_t i = 0;
  std::size_t j = 0;
  for (;;) {
    while (i < o1.size() && !is_shared(o1[i])) out.push_back(o1[i++]);
    while (j < o2.size() && !is_shared(o2[j])) out.push_back(o2[j++]);
    const bool end1 = i == o1.size();
    const bool end2 = j == o2.size();
    if (end1 && end2) break;
    if (end1 != end2 || o1[i] != o2[j]) {
      throw Error(ErrorCode::kInconsistentOnX, "orders disagree on the shared vertices");
    }
    out.push_back(o1[i]);
    ++i;
    ++j;
  }
  return out;
}

bool realizes(const SharedInstance& inst, const OrderPair& pair) {
  const std::size_t n = inst.size();
  if (!is_permutation_of(pair.l, n) || !is_permutation_of(pair.p, n)) return false;
  auto pos_l = positions(pair.l, n);
  auto pos_p = positions(pair.p, n);
  for (Side s : kBothSides) {
    std::vector<VertexId> verts = to_vector(inst.side_set(s));
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        const VertexId u = verts[a];
        const VertexId v = verts[b];
        const bool inverted = (pos_l[u] < pos_l[v]) != (pos_p[u] < pos_p[v]);
        if (inverted != inst.has_edge(s, u, v)) return false;
      }
    }
  }
  return true;
}

PermutationResult recognize_simultaneous_permutation(const SharedInstance& inst) {
  if (!inst.forced().empty()) {
    throw Error(ErrorCode::kForcedNotSupported,
                "forced edges are only supported for chordal recognition");
  }
  ComparabilityResult comp = recognize_simultaneous_comparability(inst);
  if (auto* w = std::get_if<ForcingWitness>(&comp)) {
    return PermutationWitness{FailedSide::kComparability, std::move(*w)};
  }
  const SharedInstance co = complement_pair(inst);
  ComparabilityResult co_comp = recognize_simultaneous_comparability(co);
  if (auto* w = std::get_if<ForcingWitness>(&co_comp)) {
    return PermutationWitness{FailedSide::kCoComparability, std::move(*w)};
  }

  PermutationCertificate cert;
  cert.comparability_cert = std::get<ComparabilityCertificate>(std::move(comp));
  cert.co_comparability_cert = std::get<ComparabilityCertificate>(std::move(co_comp));
  std::array<OrderPair, 2> local;
  for (Side s : kBothSides) {
    const Bitset& side = inst.side_set(s);
    std::vector<VertexId> verts = to_vector(side);
    local[index_of(s)] = build_order_pair(cert.comparability_cert.t.restricted_to(side),
                                          cert.co_comparability_cert.t.restricted_to(side), verts);
  }
  cert.global_pair.l = merge_orders(local[0].l, local[1].l, inst.shared_set());
  cert.global_pair.p = merge_orders(local[0].p, local[1].p, inst.shared_set());
  if (!realizes(inst, cert.global_pair)) {
    throw Error(ErrorCode::kInternal, "merged order pair does not realize the input graphs");
  }
  return cert;
}

bool verify_permutation_certificate(const SharedInstance& inst,
                                    const PermutationCertificate& cert) {
  if (!inst.forced().empty()) return false;
  if (!realizes(inst, cert.global_pair)) return false;
  if (!verify_comparability_certificate(inst, cert.comparability_cert)) return false;
  return verify_comparability_certificate(complement_pair(inst), cert.co_comparability_cert);
}

bool verify_permutation_witness(const SharedInstance& inst, const PermutationWitness& witness) {
  if (!inst.forced().empty()) return false;
  if (witness.side == FailedSide::kComparability) {
    return verify_forcing_witness(inst, witness.witness);
  }
  return verify_forcing_witness(complement_pair(inst), witness.witness);
}

}  // namespace simgraph
