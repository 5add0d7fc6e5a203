#include <gtest/gtest.h>

#include "bmg/error.hpp"
#include "bmg/generators.hpp"
#include "bmg/io.hpp"
#include "bmg/recognition.hpp"
#include "../support/oracles.hpp"

using namespace bmg;

namespace {

// Roles x1, x2 (color X) and y1, y2 (color Y).
ColoredDigraph four(std::initializer_list<ArcSpec> arcs) {
  return ColoredDigraph({{"x1", "X"}, {"x2", "X"}, {"y1", "Y"}, {"y2", "Y"}}, arcs);
}

ColoredDigraph essential_f1() { return four({{"x1", "y1"}, {"y2", "x2"}, {"y1", "x2"}}); }
ColoredDigraph essential_f2() { return four({{"x1", "y1"}, {"y1", "x2"}, {"x2", "y2"}}); }

std::vector<std::string> names(const ColoredDigraph& g, const ForbiddenWitness& w) {
  std::vector<std::string> out;
  for (Vertex v : w.vertices) out.push_back(g.id(v));
  return out;
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(RecognizeBmg, TreeGraphsAreBmgs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = bmg_from_tree(random_colored_tree(12, 1 + seed % 4, seed));
    auto r = recognize_bmg(g);
    ASSERT_TRUE(r.is_bmg);
    ASSERT_TRUE(r.explaining_tree);
    EXPECT_EQ(bmg_from_tree(*r.explaining_tree), g);
    EXPECT_FALSE(r.failure_reason);
  }
}

TEST(RecognizeBmg, SinkIsNotSfColored) {
  auto r = recognize_bmg(essential_f2());
  EXPECT_FALSE(r.is_bmg);
  EXPECT_EQ(r.failure_reason, FailureReason::NotSfColored);
  EXPECT_EQ(to_string(*r.failure_reason), "not_sf_colored");
}

TEST(RecognizeBmg, SinkFreeF1IsTriplesIncompatible) {
  auto g = four({{"x1", "y1"}, {"y2", "x2"}, {"y1", "x2"}, {"x2", "y2"}});
  ASSERT_TRUE(is_sf_colored(g));
  auto r = recognize_bmg(g);
  EXPECT_FALSE(r.is_bmg);
  EXPECT_EQ(r.failure_reason, FailureReason::TriplesIncompatible);
  EXPECT_FALSE(scan_forbidden_subgraphs(g).empty());
}

TEST(RecognizeBmg, EmptyGraphThrows) {
  EXPECT_EQ(code_of([] { recognize_bmg(ColoredDigraph{}); }), ErrorCode::EmptyGraph);
}

TEST(RecognizeBmg, SingleColorAndAllDistinct) {
  EXPECT_TRUE(recognize_bmg(ColoredDigraph({{"a", "A"}, {"b", "A"}}, {})).is_bmg);
  EXPECT_FALSE(recognize_bmg(ColoredDigraph({{"a", "A"}, {"b", "B"}}, {{"a", "b"}})).is_bmg);
  EXPECT_TRUE(recognize_bmg(ColoredDigraph({{"a", "A"}, {"b", "B"}}, {{"a", "b"}, {"b", "a"}})).is_bmg);
}

TEST(RecognizeViaAho, BmgsAndSinks) {
  EXPECT_TRUE(recognize_bmg_via_aho(bmg_from_tree(random_colored_tree(15, 3, 4))));
  EXPECT_FALSE(recognize_bmg_via_aho(essential_f2()));
}

TEST(ScanForbidden, EssentialF1) {
  auto g = essential_f1();
  auto w = scan_forbidden_subgraphs(g);
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(w[0].kind, WitnessKind::F1);
  EXPECT_EQ(names(g, w[0]), (std::vector<std::string>{"x1", "x2", "y1", "y2"}));
  EXPECT_TRUE(matches_witness(g, w[0]));
}

TEST(ScanForbidden, EssentialF2) {
  auto g = essential_f2();
  std::vector<WitnessKind> only{WitnessKind::F2};
  auto w = scan_forbidden_subgraphs(g, only);
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(names(g, w[0]), (std::vector<std::string>{"x1", "x2", "y1", "y2"}));
}

TEST(ScanForbidden, BicliqueIsClean) {
  EXPECT_TRUE(scan_forbidden_subgraphs(make_biclique("k", 3, 2)).empty());
}

TEST(ScanForbidden, NeedsTwoColors) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"c", "C"}}, {});
  EXPECT_EQ(code_of([&] { scan_forbidden_subgraphs(g); }), ErrorCode::NotTwoColored);
}

TEST(ScanForbidden, GadgetSharedElementGivesF3) {
  X3cInstance inst{{"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b", "c"}}};
  auto gadget = x3c_gadget(inst, GadgetScale{1, 1});
  const auto& g = gadget.graph;
  std::vector<WitnessKind> only{WitnessKind::F3};
  bool found = false;
  for (const auto& w : scan_forbidden_subgraphs(g, only)) {
    std::vector<std::string> roles;
    for (Vertex v : w.vertices) roles.push_back(gadget.role_map.at(g.id(v)));
    found = found || roles == std::vector<std::string>{"X1", "X2", "Y1", "Y2", "S"};
  }
  EXPECT_TRUE(found);
}

TEST(Axioms, Biclique) {
  auto r = check_neighborhood_axioms(make_biclique("k", 2, 2));
  EXPECT_TRUE(r.n0 && r.n1 && r.n2 && r.n3);
}

TEST(Axioms, SinkBreaksN0) {
  // y2 has no out-neighbor.
  auto h = four({{"x1", "y1"}, {"y1", "x1"}, {"x2", "y1"}, {"y1", "x2"}, {"x1", "y2"}});
  EXPECT_FALSE(check_neighborhood_axioms(h).n0);
}

TEST(Axioms, Preconditions) {
  EXPECT_EQ(code_of([] { check_neighborhood_axioms(four({{"x1", "y1"}, {"x2", "y2"}})); }),
            ErrorCode::NotConnected);
  EXPECT_EQ(code_of([] { check_neighborhood_axioms(ColoredDigraph({{"a", "A"}, {"b", "B"}, {"c", "C"}},
                                                                  {{"a", "b"}, {"b", "c"}})); }),
            ErrorCode::NotTwoColored);
}

TEST(Forbidden2Bmg, AgreesOnSmallCases) {
  EXPECT_TRUE(is_2bmg_via_forbidden(bmg_from_tree(random_colored_tree(10, 2, 9))));
  EXPECT_FALSE(is_2bmg_via_forbidden(essential_f2()));
  EXPECT_FALSE(is_2bmg_via_forbidden(essential_f1()));
}

TEST(Hourglass, TreeWithTwoCherries) {
  auto g = bmg_from_tree(parse_tree("(x|A,y|B,(x2|A,y2|B));"));
  auto w = scan_hourglasses(g);
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(w[0].kind, WitnessKind::Hourglass);
  EXPECT_TRUE(matches_witness(g, w[0]));
  EXPECT_FALSE(is_binary_explainable(g));
}

TEST(Hourglass, BicliqueIsClean) { EXPECT_TRUE(scan_hourglasses(make_biclique("k", 3, 3)).empty()); }

TEST(BinaryExplainable, CherryAndPrecondition) {
  EXPECT_TRUE(is_binary_explainable(bmg_from_tree(parse_tree("(x|A,y|B);"))));
  EXPECT_EQ(code_of([] { is_binary_explainable(essential_f1()); }), ErrorCode::NotABmg);
}

TEST(WitnessKindNames, RoundTrip) {
  for (auto k : {WitnessKind::F1, WitnessKind::F2, WitnessKind::F3, WitnessKind::Hourglass, WitnessKind::Sink}) {
    EXPECT_EQ(parse_witness_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_witness_kind("F4"));
}

TEST(Catalog, RepresentativesAreForbidden) {
  auto cat = enumerate_forbidden_classes();
  ASSERT_EQ(cat.representatives.size(), 17U);
  for (const auto& g : cat.representatives) {
    EXPECT_FALSE(recognize_bmg(g).is_bmg);
    EXPECT_FALSE(scan_forbidden_subgraphs(g).empty());
    // No representative is explained by any tree on its vertex set.
    auto masks = oracle::bmg_masks(oracle::all_trees(static_cast<int>(g.size()), false), oracle::color_vector(g));
    EXPECT_FALSE(masks.contains(oracle::graph_mask(g)));
  }
}
