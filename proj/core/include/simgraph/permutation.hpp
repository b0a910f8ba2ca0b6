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

#ifndef SIMGRAPH_PERMUTATION_HPP_
#define SIMGRAPH_PERMUTATION_HPP_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "simgraph/comparability.hpp"
#include "simgraph/graph.hpp"
#include "simgraph/instance.hpp"

namespace simgraph {

// Two total orders of one vertex set. A graph is realized by the pair when
// u-v is an edge exactly if u and v appear in opposite relative order.
struct OrderPair {
  std::vector<VertexId> l;
  std::vector<VertexId> p;
};

// A segment from position `top` on the upper line to `bottom` on the lower
// one, both 1-based.
struct Segment {
  VertexId vertex = 0;
  std::size_t top = 0;
  std::size_t bottom = 0;
};

struct PermutationCertificate {
  OrderPair global_pair;  // over V1 ∪ V2
  ComparabilityCertificate comparability_cert;     // for (G1, G2)
  ComparabilityCertificate co_comparability_cert;  // for the complement pair

  std::vector<Segment> segments() const;
};

enum class FailedSide { kComparability, kCoComparability };

struct PermutationWitness {
  FailedSide side = FailedSide::kComparability;
  // Refers to the instance itself or to complement_pair(instance).
  ForcingWitness witness;
};

using PermutationResult = std::variant<PermutationCertificate, PermutationWitness>;

// l is a topological order of f ∪ r and p one of f^-1 ∪ r, both restricted
// to `vertices` and breaking ties by smallest id. Throws kCyclicUnion.
OrderPair build_order_pair(const DirectedEdgeSet& f, const DirectedEdgeSet& r,
                           std::span<const VertexId> vertices);

// Total order on the union of two orders that agree on `shared`; restricts
// to o1 and to o2. Throws kInconsistentOnX.
std::vector<VertexId> merge_orders(std::span<const VertexId> o1, std::span<const VertexId> o2,
                                   const Bitset& shared);

// Throws kForcedNotSupported on instances with forced edges.
PermutationResult recognize_simultaneous_permutation(const SharedInstance& inst);

// u-v in E_i iff u, v are inverted between l and p, for every pair inside
// each V_i; the embedded comparability certificates are re-checked too.
bool verify_permutation_certificate(const SharedInstance& inst,
                                    const PermutationCertificate& cert);

bool verify_permutation_witness(const SharedInstance& inst, const PermutationWitness& witness);

// Realization check on its own, without the embedded certificates.
bool realizes(const SharedInstance& inst, const OrderPair& pair);

}  // namespace simgraph

#endif  // SIMGRAPH_PERMUTATION_HPP_
