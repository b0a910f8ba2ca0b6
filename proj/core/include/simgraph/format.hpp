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

#ifndef SIMGRAPH_FORMAT_HPP_
#define SIMGRAPH_FORMAT_HPP_

#include <string>
#include <string_view>

#include "simgraph/chordal.hpp"
#include "simgraph/comparability.hpp"
#include "simgraph/instance.hpp"
#include "simgraph/permutation.hpp"

namespace simgraph {

// Line-oriented text for recognizer results. Vertices are written by name,
// edges as u-v and arcs as u->v.
//
//   chordal        YES / A: <edges> / PEO: <vertices>
//                  NO / RESIDUAL: <vertices> / F: <edges>
//   comparability  YES / T: <arcs> / A': <arcs>
//                  NO / CONFLICT: <arc> / CHAIN: (i->j ~ k->l via E1, nonedge j-l) ...
//   permutation    YES / L: / P: / SEGMENTS: v:top,bottom ... / COMP: <comparability
//                  block without YES> / CO-COMP: <same>
//                  NO / COMP: or CO-COMP: / CONFLICT: / CHAIN:
//
// The parsers accept what the writers emit, ignore blank lines and '#'
// comments, and throw Error (kSyntaxError, kUnknownVertex) otherwise.
// SEGMENTS is derived from L and P and is not read back.

std::string serialize_chordal_result(const SharedInstance& inst, const ChordalResult& result);
std::string serialize_comparability_result(const SharedInstance& inst,
                                           const ComparabilityResult& result);
std::string serialize_permutation_result(const SharedInstance& inst,
                                         const PermutationResult& result);

ChordalResult parse_chordal_result(const SharedInstance& inst, std::string_view text);
ComparabilityResult parse_comparability_result(const SharedInstance& inst, std::string_view text);
PermutationResult parse_permutation_result(const SharedInstance& inst, std::string_view text);

std::string format_arc(const SharedInstance& inst, Arc a);
std::string format_arcs(const SharedInstance& inst, const DirectedEdgeSet& arcs);

}  // namespace simgraph

#endif  // SIMGRAPH_FORMAT_HPP_
