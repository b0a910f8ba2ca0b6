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

#ifndef SIMGRAPH_COMPARABILITY_HPP_
#define SIMGRAPH_COMPARABILITY_HPP_

#include <variant>
#include <vector>

#include "simgraph/graph.hpp"
#include "simgraph/instance.hpp"

namespace simgraph {

enum class ClassKind { kBase1, kBase2, kSuper };

std::string_view to_string(ClassKind kind);

// A composite class. Base classes come in inverse pairs labelled +k / -k;
// super classes carry label 0.
struct EdgeClass {
  DirectedEdgeSet edges;
  ClassKind kind = ClassKind::kSuper;
  int label = 0;

  // C ∩ C^-1 = ∅.
  bool disjoint_from_inverse() const;
};

// Bases B_1..B_i followed by supers S_{i+1}..S_j, in extraction order.
struct SDecomposition {
  std::vector<EdgeClass> bases;
  std::vector<EdgeClass> supers;
};

struct ComparabilityCertificate {
  // Orients every edge of E1 ∪ E2 once; transitive within V1 and within V2.
  DirectedEdgeSet t;
  // t ∪ a_prime, transitive.
  DirectedEdgeSet t_full;
  // Directed augmenting edges between V1 - X and V2 - X.
  DirectedEdgeSet a_prime;
};

// One Γ step inside a single input graph: `from` and `to` share an
// endpoint and the two opposite endpoints (`nonedge`) are not adjacent in
// G_side.
struct ForcingStep {
  Arc from;
  Arc to;
  Side side = Side::kFirst;
  Edge nonedge;
};

// A composite class that contains some edge in both directions, with the
// chain of forcing steps that leads from `conflict` to its reverse.
struct ForcingWitness {
  DirectedEdgeSet class_edges;
  Arc conflict;
  std::vector<ForcingStep> chain;
};

using SDecompositionResult = std::variant<SDecomposition, ForcingWitness>;
using ComparabilityResult = std::variant<ComparabilityCertificate, ForcingWitness>;

// (i,j) Γ (i',j') iff they share a tail with j-j' absent, or share a head
// with i-i' absent. Reflexive. Throws kNotAnEdge unless both are edges of g.
bool gamma_related(Arc e, Arc f, const Graph& g);

// Partition of the 2|E| arcs of g into implication classes, ordered by
// smallest member. Arc order: by undirected edge, the (low, high)
// direction first.
std::vector<DirectedEdgeSet> implication_classes(const Graph& g);

// Partition of the arcs of E1 ∪ E2 under the Γ' closure, where a step is
// only admitted between two edges of the same input graph.
std::vector<EdgeClass> composite_classes(const SharedInstance& inst);

// Base classes are peeled off first, then super classes, each time taking
// the class that holds the smallest surviving arc. Deleting a class merges
// the classes of its triangles through a union-find over arcs that is kept
// closed under inversion.
SDecompositionResult s_decomposition(const SharedInstance& inst);

struct Completion {
  DirectedEdgeSet t_full;
  DirectedEdgeSet a_prime;
};

// Adds (a,c) for every a -> b -> c in t with b in X and a, c private to
// opposite sides. Throws kNotPseudoTransitive if t is not a
// pseudo-transitive orientation of E1 ∪ E2 and kCompletionFailure if the
// result is not transitive.
Completion complete_orientation(const DirectedEdgeSet& t, const SharedInstance& inst);

ComparabilityResult pseudo_transitive_orientation(const SharedInstance& inst);

// Throws kForcedNotSupported on instances with forced edges.
ComparabilityResult recognize_simultaneous_comparability(const SharedInstance& inst);

bool verify_comparability_certificate(const SharedInstance& inst,
                                      const ComparabilityCertificate& cert);
bool verify_forcing_witness(const SharedInstance& inst, const ForcingWitness& witness);

}  // namespace simgraph

#endif  // SIMGRAPH_COMPARABILITY_HPP_
