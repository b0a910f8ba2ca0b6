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

#include <gtest/gtest.h>

#include "simgraph/errors.hpp"
#include "simgraph/graph.hpp"
#include "simgraph/instance.hpp"
#include "simgraph/random.hpp"
#include "support/brute_force.hpp"

namespace simgraph {
namespace {

using testing::load_fixture;

ErrorCode code_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kInternal;
}

VertexId id(const SharedInstance& inst, std::string_view name) { return *inst.find(name); }

Edge edge(const SharedInstance& inst, std::string_view a, std::string_view b) {
  return Edge::of(id(inst, a), id(inst, b));
}

TEST(ParseInstance, Singleton) {
  auto inst = parse_instance("V1: a\nV2: a\nE1:\nE2:\n");
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.shared_set().count(), 1u);
  EXPECT_TRUE(inst.all_edges().empty());
}

TEST(ParseInstance, Cycle8Counts) {
  auto inst = load_fixture("cycle8");
  EXPECT_EQ(inst.side_set(Side::kFirst).count(), 6u);
  EXPECT_EQ(inst.side_set(Side::kSecond).count(), 6u);
  EXPECT_EQ(inst.shared_set().count(), 4u);
  EXPECT_EQ(inst.edges(Side::kFirst).size(), 4u);
  EXPECT_EQ(inst.edges(Side::kSecond).size(), 4u);
}

TEST(ParseInstance, CommentsAndOptionalEdgeLines) {
  auto inst = parse_instance("# header\nV1: a b   # trailing\n\nV2: b c\n");
  EXPECT_EQ(inst.size(), 3u);
  EXPECT_TRUE(inst.all_edges().empty());
}

TEST(ParseInstance, Errors) {
  EXPECT_EQ(code_of("V1: a b\nV2: a b\nE1: a-b\nE2:\n"), ErrorCode::kXInducedMismatch);
  EXPECT_EQ(code_of("V1: a\nV2: a\nE1: a-a\n"), ErrorCode::kIllegalEdge);
  EXPECT_EQ(code_of("V1: a b\nV2: a b\nE1: a-b a-b\nE2: a-b\n"), ErrorCode::kIllegalEdge);
  EXPECT_EQ(code_of("V1: a b\nV2: a c\nE1: b-c\n"), ErrorCode::kIllegalEdge);
  EXPECT_EQ(code_of("V1: a b\nV2: c d\nF: a-b\n"), ErrorCode::kIllegalForced);
  EXPECT_EQ(code_of("V1: a b\nV2: c d\nF: a-c a-c\n"), ErrorCode::kIllegalEdge);
  EXPECT_EQ(code_of("V1: a\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a\nV2: a\nV1: a\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a-b\nV2: a\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a\nV2: a\nE3:\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a\nV2: a\nE1 a-b\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a a\nV2: a\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of("V1: a\nV2: a\nE1: ab\n"), ErrorCode::kSyntaxError);
}

TEST(ParseInstance, EdgesAreNormalised) {
  auto inst = parse_instance("V1: a b\nV2: a b\nE1: b-a\nE2: a-b\n");
  EXPECT_EQ(serialize_instance(inst), "V1: a b\nV2: a b\nE1: a-b\nE2: a-b\n");
}

TEST(ParseInstance, ForcedEdges) {
  auto inst = parse_instance("V1: a x\nV2: b x\nE1: a-x\nE2: b-x\nF: b-a\n");
  EXPECT_EQ(inst.forced(), EdgeSet({edge(inst, "a", "b")}));
  EXPECT_EQ(serialize_instance(inst), "V1: a x\nV2: b x\nE1: a-x\nE2: b-x\nF: a-b\n");
}

TEST(SerializeInstance, RoundTripFixtures) {
  for (const char* name : {"p3pair", "cycle8", "fan", "c5full", "c6full", "emptyx"}) {
    auto inst = load_fixture(name);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << name;
  }
}

TEST(ComplementPair, P3Pair) {
  auto inst = load_fixture("p3pair");
  auto co = complement_pair(inst);
  EXPECT_EQ(co.edges(Side::kFirst), EdgeSet({edge(co, "a", "c")}));
  EXPECT_EQ(co.edges(Side::kSecond), EdgeSet({edge(co, "b", "d")}));
}

TEST(ComplementPair, TriangleBecomesEdgeless) {
  auto inst = parse_instance("V1: a b c\nV2: a b c\nE1: a-b b-c a-c\nE2: a-b b-c a-c\n");
  EXPECT_TRUE(complement_pair(inst).all_edges().empty());
}

TEST(ComplementPair, Involution) {
  for (const char* name : {"p3pair", "cycle8", "fan", "c6full", "emptyx"}) {
    auto inst = load_fixture(name);
    EXPECT_EQ(complement_pair(complement_pair(inst)), inst) << name;
  }
}

TEST(ComplementPair, RejectsForced) {
  auto inst = parse_instance("V1: a\nV2: b\nF: a-b\n");
  try {
    complement_pair(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kForcedNotSupported);
  }
}

TEST(UnionGraph, Cycle8IsTheEightCycle) {
  auto inst = load_fixture("cycle8");
  Graph g = union_graph(inst, {});
  EXPECT_EQ(g.edge_count(), 8u);
  for (VertexId v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_FALSE(is_chordal(g));
  const char* ring[] = {"x1", "u1", "x2", "w1", "x3", "u2", "x4", "w2"};
  for (int i = 0; i < 8; ++i) {
    EXPECT_TRUE(g.adjacent(id(inst, ring[i]), id(inst, ring[(i + 1) % 8])));
  }
}

TEST(UnionGraph, FanWithAugmentingEdge) {
  auto inst = load_fixture("fan");
  EXPECT_EQ(union_graph(inst, {edge(inst, "u", "w")}).edge_count(), 12u);
}

TEST(UnionGraph, P3PairWithAugmentingEdge) {
  auto inst = load_fixture("p3pair");
  EXPECT_EQ(union_graph(inst, {edge(inst, "c", "d")}).edge_count(), 4u);
}

TEST(UnionGraph, RejectsNonAugmentingPair) {
  auto inst = load_fixture("p3pair");
  EXPECT_THROW(union_graph(inst, {edge(inst, "a", "c")}), Error);
}

TEST(FindPeo, Triangle) {
  Graph g({"a", "b", "c"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  auto peo = find_peo(g);
  ASSERT_TRUE(peo);
  EXPECT_EQ(peo->order, (std::vector<VertexId>{0, 1, 2}));
}

TEST(FindPeo, FourCycleHasNone) { EXPECT_FALSE(find_peo(testing::cycle(4))); }

TEST(FindPeo, FanUnion) {
  auto inst = load_fixture("fan");
  Graph g = union_graph(inst, {edge(inst, "u", "w")});
  auto peo = find_peo(g);
  ASSERT_TRUE(peo);
  EXPECT_TRUE(testing::order_is_peo(g, peo->order));
  EXPECT_TRUE(is_peo(g, peo->order));
}

TEST(FindPeo, AgreesWithOrderingSearch) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t mask = pairs == 0 ? 0 : rng.next() & ((std::uint64_t{1} << pairs) - 1);
    Graph g = testing::graph_from_mask(n, mask);
    auto peo = find_peo(g);
    EXPECT_EQ(peo.has_value(), testing::brute_peo_exists(g)) << "mask " << mask;
    if (peo) EXPECT_TRUE(testing::order_is_peo(g, peo->order));
  }
}

TEST(IsPeo, RejectsNonPermutations) {
  Graph g = testing::cycle(3);
  EXPECT_FALSE(is_peo(g, std::vector<VertexId>{0, 1}));
  EXPECT_FALSE(is_peo(g, std::vector<VertexId>{0, 1, 1}));
  EXPECT_TRUE(is_peo(g, std::vector<VertexId>{2, 0, 1}));
}

TEST(IsTransitive, Examples) {
  EXPECT_TRUE(is_transitive({{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_FALSE(is_transitive({{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_transitive({{0, 1}, {1, 0}}));
  EXPECT_TRUE(is_transitive({}));
}

TEST(IsTransitive, AgreesWithTripleLoop) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    DirectedEdgeSet t;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = 0; b < n; ++b) {
        if (a != b && rng.chance(0.3)) t.insert({a, b});
      }
    }
    EXPECT_EQ(is_transitive(t), testing::triple_transitive(t, n));
  }
}

TEST(DirectedEdgeSet, InverseAndHat) {
  DirectedEdgeSet s{{0, 1}, {2, 1}};
  EXPECT_EQ(s.inverse(), DirectedEdgeSet({{1, 0}, {1, 2}}));
  EXPECT_EQ(s.inverse().inverse(), s);
  EXPECT_EQ(s.hat(), DirectedEdgeSet({{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
  EXPECT_EQ(s.undirected(), EdgeSet({{0, 1}, {1, 2}}));
}

TEST(Graph, Complement) {
  Graph g = testing::cycle(4);
  Graph co = g.complement();
  EXPECT_EQ(co.edge_count(), 2u);
  EXPECT_TRUE(co.adjacent(0, 2));
  EXPECT_EQ(co.complement(), g);
  EXPECT_THROW(g.add_edge(1, 1), Error);
}

}  // namespace
}  // namespace simgraph
