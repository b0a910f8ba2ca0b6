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

#ifndef SIMGRAPH_CHORDAL_HPP_
#define SIMGRAPH_CHORDAL_HPP_

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "simgraph/graph.hpp"
#include "simgraph/instance.hpp"

namespace simgraph {

struct ChordalCertificate {
  // Augmenting edges, always a superset of the instance's forced edges.
  EdgeSet augmenting;
  // Every vertex of V1 ∪ V2 in the order it was eliminated.
  std::vector<VertexId> elimination_order;
};

// State in which no vertex can be eliminated.
struct ChordalDiagnostic {
  Bitset residual_vertices;
  EdgeSet accumulated_f;
};

using ChordalResult = std::variant<ChordalCertificate, ChordalDiagnostic>;

enum class TieBreak { kSmallestId, kLargestId };

struct ChordalOptions {
  TieBreak tie_break = TieBreak::kSmallestId;
};

struct NeighborSplit {
  Bitset first;   // N1: neighbours inside V1
  Bitset second;  // N2: neighbours inside V2
};

// Neighbourhood of v in (G1, G2, f) restricted to `alive`, split by side.
// Shared neighbours appear in both halves. Throws kUnknownVertex.
NeighborSplit neighbors_split(VertexId v, const SharedInstance& inst, const EdgeSet& f,
                              const Bitset& alive);
NeighborSplit neighbors_split(VertexId v, const SharedInstance& inst, const EdgeSet& f);

// A PEO of G_s expressed in instance ids, if G_s is chordal.
std::optional<Peo> host_peo(const SharedInstance& inst, Side host);

// Whether `s` induces a clique in G_host. With a PEO of the host this
// is the linear test: take the earliest member v of `s` in the order and
// check N(v) ⊇ s - {v}. Without one it falls back to pairwise testing.
bool is_clique_in(Side host, const Bitset& s, const SharedInstance& inst,
                  const std::optional<Peo>& peo);

// Smallest (or largest) alive v whose N1 and N2 induce cliques in G1 and G2.
std::optional<VertexId> s_elimination_vertex(const SharedInstance& inst, const EdgeSet& f,
                                             const Bitset& alive,
                                             TieBreak tie_break = TieBreak::kSmallestId);

// C(v) = (N1(v) - X) x (N2(v) - X).
EdgeSet fill_edges(VertexId v, const SharedInstance& inst, const EdgeSet& f,
                   const Bitset& alive);

ChordalResult recognize_simultaneous_chordal(const SharedInstance& inst,
                                             const ChordalOptions& options = {});

bool verify_chordal_certificate(const SharedInstance& inst, const ChordalCertificate& cert);
// Re-checks that the diagnostic describes a stuck state.
bool verify_chordal_diagnostic(const SharedInstance& inst, const ChordalDiagnostic& diag);

}  // namespace simgraph

#endif  // SIMGRAPH_CHORDAL_HPP_
