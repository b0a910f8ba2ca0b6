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

#include <set>

#include "simgraph/comparability.hpp"
#include "simgraph/errors.hpp"
#include "simgraph/generate.hpp"
#include "simgraph/oracle.hpp"
#include "support/brute_force.hpp"

namespace simgraph {
namespace {

using testing::load_fixture;

struct Names {
  const SharedInstance& inst;
  VertexId operator()(std::string_view n) const { return *inst.find(n); }
  Arc arc(std::string_view a, std::string_view b) const { return {(*this)(a), (*this)(b)}; }
};

Graph path4() {
  Graph g({"a", "b", "c", "d"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

// {a,b,c} inside one side, ab and bc in `c` imply ac in `c`.
bool pseudo_transitive_by_triples(const SharedInstance& inst, const DirectedEdgeSet& c) {
  for (const Arc& ab : c) {
    for (const Arc& bc : c) {
      if (ab.head != bc.tail) continue;
      for (Side s : kBothSides) {
        if (inst.in_side(s, ab.tail) && inst.in_side(s, ab.head) && inst.in_side(s, bc.head) &&
            !c.contains({ab.tail, bc.head})) {
          return false;
        }
      }
    }
  }
  return true;
}

TEST(GammaRelated, Examples) {
  Graph p4 = path4();
  EXPECT_TRUE(gamma_related({1, 0}, {1, 2}, p4));
  EXPECT_TRUE(gamma_related({0, 1}, {2, 1}, p4));
  EXPECT_TRUE(gamma_related({0, 1}, {0, 1}, p4));
  EXPECT_FALSE(gamma_related({0, 1}, {1, 2}, p4));
  Graph k3 = testing::cycle(3);
  EXPECT_FALSE(gamma_related({1, 0}, {1, 2}, k3));
  try {
    gamma_related({0, 2}, {0, 1}, p4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnEdge);
  }
}

TEST(ImplicationClasses, Path4) {
  auto classes = implication_classes(path4());
  ASSERT_EQ(classes.size(), 2u);
  DirectedEdgeSet forward{{1, 0}, {1, 2}, {3, 2}};
  EXPECT_EQ(std::set<DirectedEdgeSet>(classes.begin(), classes.end()),
            (std::set<DirectedEdgeSet>{forward, forward.inverse()}));
  // Ordered by smallest member: (a,b) comes first.
  EXPECT_TRUE(classes[0].contains({0, 1}));
}

TEST(ImplicationClasses, FiveCycle) {
  auto classes = implication_classes(testing::cycle(5));
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].size(), 10u);
}

TEST(ImplicationClasses, SingleEdge) {
  Graph k2({"a", "b"});
  k2.add_edge(0, 1);
  auto classes = implication_classes(k2);
  EXPECT_EQ(classes, (std::vector<DirectedEdgeSet>{{{0, 1}}, {{1, 0}}}));
}

TEST(CompositeClasses, P3Pair) {
  auto inst = load_fixture("p3pair");
  Names n{inst};
  auto classes = composite_classes(inst);
  ASSERT_EQ(classes.size(), 2u);
  DirectedEdgeSet s{n.arc("a", "b"), n.arc("c", "b"), n.arc("a", "d")};
  EXPECT_EQ(classes[0].edges, s);
  EXPECT_EQ(classes[1].edges, s.inverse());
  for (const auto& c : classes) {
    EXPECT_EQ(c.kind, ClassKind::kSuper);
    EXPECT_EQ(c.label, 0);
    EXPECT_TRUE(c.disjoint_from_inverse());
  }
}

TEST(CompositeClasses, FullSharingDegeneratesToImplicationClasses) {
  auto inst = load_fixture("c6full");
  auto composite = composite_classes(inst);
  auto implication = implication_classes(inst.graph(Side::kFirst));
  ASSERT_EQ(composite.size(), implication.size());
  for (std::size_t k = 0; k < composite.size(); ++k) {
    EXPECT_EQ(composite[k].edges, implication[k]);
  }
}

TEST(CompositeClasses, EmptyXGivesBaseClasses) {
  auto inst = load_fixture("emptyx");
  auto classes = composite_classes(inst);
  ASSERT_EQ(classes.size(), 4u);
  EXPECT_EQ(classes[0].kind, ClassKind::kBase1);
  EXPECT_EQ(classes[1].kind, ClassKind::kBase1);
  EXPECT_EQ(classes[2].kind, ClassKind::kBase2);
  EXPECT_EQ(classes[3].kind, ClassKind::kBase2);
  EXPECT_EQ(classes[0].label, -classes[1].label);
  EXPECT_NE(classes[0].label, 0);
}

TEST(CompositeClasses, MatchBruteForceClosure) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 300; ++seed) {
    auto inst = random_instance(3 + seed % 4, 3 + seed / 4 % 4, seed % 4, 0.45, seed);
    if (inst.all_edges().size() > 10) continue;
    ++checked;
    auto classes = composite_classes(inst);
    std::set<DirectedEdgeSet> ours;
    std::size_t arcs = 0;
    for (const auto& c : classes) {
      ours.insert(c.edges);
      arcs += c.edges.size();
      bool meets_x = false;
      for (const Arc& a : c.edges) meets_x |= inst.in_shared(a.tail) && inst.in_shared(a.head);
      EXPECT_EQ(c.kind == ClassKind::kSuper, meets_x);
      EXPECT_EQ(c.disjoint_from_inverse(), pseudo_transitive_by_triples(inst, c.edges));
      bool has_inverse = false;
      for (const auto& d : classes) has_inverse |= d.edges == c.edges.inverse();
      EXPECT_TRUE(has_inverse);
    }
    EXPECT_EQ(ours, testing::brute_composite_classes(inst)) << serialize_instance(inst);
    EXPECT_EQ(arcs, 2 * inst.all_edges().size());
  }
}

TEST(SDecomposition, P3Pair) {
  auto inst = load_fixture("p3pair");
  Names n{inst};
  auto result = s_decomposition(inst);
  ASSERT_TRUE(std::holds_alternative<SDecomposition>(result));
  const auto& d = std::get<SDecomposition>(result);
  EXPECT_TRUE(d.bases.empty());
  ASSERT_EQ(d.supers.size(), 1u);
  EXPECT_EQ(d.supers[0].edges, DirectedEdgeSet({n.arc("a", "b"), n.arc("c", "b"),
                                                n.arc("a", "d")}));
}

TEST(SDecomposition, FiveCycleGivesWitness) {
  auto inst = load_fixture("c5full");
  auto result = s_decomposition(inst);
  ASSERT_TRUE(std::holds_alternative<ForcingWitness>(result));
  const auto& w = std::get<ForcingWitness>(result);
  EXPECT_EQ(w.class_edges.size(), 10u);
  EXPECT_TRUE(verify_forcing_witness(inst, w));
}

TEST(SDecomposition, SixCycle) {
  auto inst = load_fixture("c6full");
  auto result = s_decomposition(inst);
  ASSERT_TRUE(std::holds_alternative<SDecomposition>(result));
  const auto& d = std::get<SDecomposition>(result);
  EXPECT_TRUE(d.bases.empty());
  auto implication = implication_classes(inst.graph(Side::kFirst));
  for (const auto& s : d.supers) {
    EXPECT_TRUE(s.disjoint_from_inverse());
    EXPECT_NE(std::find(implication.begin(), implication.end(), s.edges), implication.end());
  }
}

// Each listed class is a class of what is left after deleting its
// predecessors.
void expect_sound(const SharedInstance& inst, const SDecomposition& d) {
  SharedInstance rest = inst;
  std::size_t covered = 0;
  auto step = [&](const EdgeClass& listed, bool base) {
    auto classes = composite_classes(rest);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const EdgeClass& c) { return c.edges == listed.edges; });
    ASSERT_NE(it, classes.end()) << serialize_instance(inst);
    EXPECT_EQ(it->kind != ClassKind::kSuper, base);
    EXPECT_EQ(listed.kind, it->kind);
    EXPECT_TRUE(listed.disjoint_from_inverse());
    covered += 2 * listed.edges.size();
    rest = rest.without_edges(listed.edges.undirected());
  };
  for (const auto& b : d.bases) step(b, true);
  for (const auto& c : composite_classes(rest)) EXPECT_EQ(c.kind, ClassKind::kSuper);
  for (const auto& s : d.supers) step(s, false);
  EXPECT_TRUE(rest.all_edges().empty());
  EXPECT_EQ(covered, 2 * inst.all_edges().size());
}

TEST(SDecomposition, DecompositionIsSound) {
  int decompositions = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    auto inst = seed % 2 ? random_instance(4 + seed % 4, 4 + seed / 2 % 4, seed % 5, 0.5, seed)
                         : planted_yes(GraphClass::kComparability, 6, 6, 3, seed, {0.3});
    auto result = s_decomposition(inst);
    if (auto* d = std::get_if<SDecomposition>(&result)) {
      ++decompositions;
      expect_sound(inst, *d);
    } else {
      EXPECT_TRUE(verify_forcing_witness(inst, std::get<ForcingWitness>(result)));
    }
  }
  EXPECT_GT(decompositions, 300);
}

TEST(PseudoTransitiveOrientation, P3Pair) {
  auto inst = load_fixture("p3pair");
  Names n{inst};
  auto result = pseudo_transitive_orientation(inst);
  ASSERT_TRUE(std::holds_alternative<ComparabilityCertificate>(result));
  const auto& cert = std::get<ComparabilityCertificate>(result);
  DirectedEdgeSet t{n.arc("a", "b"), n.arc("c", "b"), n.arc("a", "d")};
  EXPECT_EQ(cert.t, t);
  EXPECT_TRUE(cert.a_prime.empty());
  EXPECT_EQ(cert.t_full, t);
  EXPECT_TRUE(verify_comparability_certificate(inst, cert));
}

TEST(PseudoTransitiveOrientation, SixCycleAlternates) {
  auto inst = load_fixture("c6full");
  auto result = pseudo_transitive_orientation(inst);
  ASSERT_TRUE(std::holds_alternative<ComparabilityCertificate>(result));
  const auto& cert = std::get<ComparabilityCertificate>(result);
  EXPECT_EQ(cert.t_full, cert.t);
  EXPECT_TRUE(testing::triple_transitive(cert.t, inst.size()));
  for (VertexId v = 0; v < inst.size(); ++v) {
    int out = 0;
    for (const Arc& a : cert.t) out += a.tail == v;
    EXPECT_TRUE(out == 0 || out == 2);
  }
}

TEST(CompleteOrientation, P3PairBothChoices) {
  auto inst = load_fixture("p3pair");
  Names n{inst};
  DirectedEdgeSet t{n.arc("a", "b"), n.arc("c", "b"), n.arc("a", "d")};
  EXPECT_TRUE(complete_orientation(t, inst).a_prime.empty());
  EXPECT_TRUE(complete_orientation(t.inverse(), inst).a_prime.empty());
}

TEST(CompleteOrientation, RuleFiresOnce) {
  auto inst = parse_instance("V1: p q\nV2: q r\nE1: p-q\nE2: q-r\n");
  Names n{inst};
  auto done = complete_orientation({n.arc("p", "q"), n.arc("q", "r")}, inst);
  EXPECT_EQ(done.a_prime, DirectedEdgeSet({n.arc("p", "r")}));
  EXPECT_EQ(done.t_full, DirectedEdgeSet({n.arc("p", "q"), n.arc("p", "r"), n.arc("q", "r")}));
}

TEST(CompleteOrientation, RejectsNonPseudoTransitiveInput) {
  auto inst = parse_instance("V1: a b c\nV2: a b c\nE1: a-b b-c\nE2: a-b b-c\n");
  Names n{inst};
  try {
    complete_orientation({n.arc("a", "b"), n.arc("b", "c")}, inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPseudoTransitive);
  }
  // Leaves b-c unoriented.
  EXPECT_THROW(complete_orientation({n.arc("a", "b")}, inst), Error);
}

TEST(RecognizeComparability, Fixtures) {
  for (const char* name : {"p3pair", "emptyx", "c6full", "fan", "cycle8"}) {
    auto inst = load_fixture(name);
    auto result = recognize_simultaneous_comparability(inst);
    ASSERT_TRUE(std::holds_alternative<ComparabilityCertificate>(result)) << name;
    EXPECT_TRUE(verify_comparability_certificate(inst, std::get<ComparabilityCertificate>(result)));
  }
  auto c5 = load_fixture("c5full");
  auto result = recognize_simultaneous_comparability(c5);
  ASSERT_TRUE(std::holds_alternative<ForcingWitness>(result));
  EXPECT_TRUE(verify_forcing_witness(c5, std::get<ForcingWitness>(result)));
}

TEST(RecognizeComparability, RejectsForced) {
  auto inst = parse_instance("V1: a\nV2: b\nF: a-b\n");
  try {
    recognize_simultaneous_comparability(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kForcedNotSupported);
  }
}

TEST(RecognizeComparability, FullSharingMatchesOrientationSearch) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::graphs_up_to_isomorphism(n)) {
      auto result = recognize_simultaneous_comparability(testing::full_sharing(g));
      EXPECT_EQ(std::holds_alternative<ComparabilityCertificate>(result),
                testing::brute_transitively_orientable(g));
    }
  }
}

TEST(VerifyComparabilityCertificate, RejectsBrokenCertificates) {
  auto inst = load_fixture("p3pair");
  Names n{inst};
  DirectedEdgeSet t{n.arc("a", "b"), n.arc("c", "b"), n.arc("a", "d")};
  EXPECT_TRUE(verify_comparability_certificate(inst, {t, t, {}}));
  DirectedEdgeSet missing{n.arc("a", "b"), n.arc("c", "b")};
  EXPECT_FALSE(verify_comparability_certificate(inst, {missing, missing, {}}));

  auto chain = parse_instance("V1: p q\nV2: q r\nE1: p-q\nE2: q-r\n");
  Names c{chain};
  DirectedEdgeSet tc{c.arc("p", "q"), c.arc("q", "r")};
  EXPECT_FALSE(verify_comparability_certificate(chain, {tc, tc, {}}));
  DirectedEdgeSet a{c.arc("p", "r")};
  EXPECT_TRUE(verify_comparability_certificate(chain, {tc, tc.united(a), a}));
}

TEST(VerifyForcingWitness, RejectsTamperedChains) {
  auto inst = load_fixture("c5full");
  auto w = std::get<ForcingWitness>(recognize_simultaneous_comparability(inst));
  EXPECT_EQ(w.chain.size(), 5u);
  ASSERT_TRUE(verify_forcing_witness(inst, w));

  auto adjacent = w;
  adjacent.chain[0].nonedge = adjacent.chain[0].from.undirected();
  EXPECT_FALSE(verify_forcing_witness(inst, adjacent));

  auto open = w;
  open.chain.pop_back();
  EXPECT_FALSE(verify_forcing_witness(inst, open));

  auto wrong_conflict = w;
  wrong_conflict.conflict = w.conflict.reversed();
  EXPECT_FALSE(verify_forcing_witness(inst, wrong_conflict));

  EXPECT_FALSE(verify_forcing_witness(inst, ForcingWitness{}));
}

}  // namespace
}  // namespace simgraph
