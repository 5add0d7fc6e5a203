#include <gtest/gtest.h>

#include "bmg/error.hpp"
#include "bmg/generators.hpp"
#include "bmg/ilp.hpp"
#include "bmg/io.hpp"
#include "bmg/recognition.hpp"
#include "bmg/rng.hpp"

using namespace bmg;

namespace {

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

TEST(Rng, Deterministic) {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  SplitMix64 c(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(7), 7U);
    const double u = c.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomTree, Cherry) {
  auto t = random_colored_tree(2, 2, 0);
  EXPECT_EQ(t.num_leaves(), 2U);
  EXPECT_EQ(t.num_nodes(), 3U);
  EXPECT_NE(t.leaf_color(t.leaves()[0]), t.leaf_color(t.leaves()[1]));
}

TEST(RandomTree, AllDistinctColorsGiveCompleteGraph) {
  auto g = bmg_from_tree(random_colored_tree(6, 6, 11));
  EXPECT_EQ(g.num_arcs(), 30U);
}

TEST(RandomTree, SeedIsReproducible) {
  EXPECT_EQ(serialize_tree(random_colored_tree(20, 4, 99)), serialize_tree(random_colored_tree(20, 4, 99)));
  EXPECT_NE(serialize_tree(random_colored_tree(20, 4, 99)), serialize_tree(random_colored_tree(20, 4, 98)));
}

TEST(RandomTree, UsesEveryColor) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = bmg_from_tree(random_colored_tree(8, 5, s));
    EXPECT_EQ(g.num_colors(), 5U);
  }
}

TEST(RandomTree, BadParameters) {
  EXPECT_EQ(code_of([] { random_colored_tree(2, 3, 0); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([] { random_colored_tree(2, 0, 0); }), ErrorCode::BadParameters);
}

TEST(Perturb, ZeroFlips) {
  auto g = bmg_from_tree(random_colored_tree(7, 2, 1));
  auto p = perturb(g, 0, 5, EditMode::Editing);
  EXPECT_EQ(p.graph, g);
  EXPECT_TRUE(p.edits.pairs.empty());
}

TEST(Perturb, ReproducibleAndRespectsMode) {
  auto g = bmg_from_tree(random_colored_tree(7, 3, 2));
  auto a = perturb(g, 3, 8, EditMode::Deletion);
  auto b = perturb(g, 3, 8, EditMode::Deletion);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.edits, b.edits);
  EXPECT_EQ(a.graph.num_arcs(), g.num_arcs() - 3);
  auto c = perturb(g, 2, 8, EditMode::Completion);
  EXPECT_EQ(c.graph.num_arcs(), g.num_arcs() + 2);
  EXPECT_EQ(code_of([&] { perturb(g, 1000, 1, EditMode::Editing); }), ErrorCode::NotEnoughPairs);
}

TEST(Biclique, ThreePlusThree) {
  auto k = make_biclique("S", 3, 3);
  EXPECT_EQ(k.num_arcs(), 18U);
  EXPECT_TRUE(recognize_bmg(k).is_bmg);
}

TEST(BmgSpecial, TwoSingleEdges) {
  std::vector<ColoredDigraph> comps{make_biclique("X", 1, 1), make_biclique("Y", 1, 1)};
  auto g = bmg_special(comps, 0);
  EXPECT_EQ(g.num_arcs(), 4U + 2U);
  EXPECT_TRUE(g.has_arc(g.vertex("X_b1"), g.vertex("Y_w1")));
  EXPECT_TRUE(g.has_arc(g.vertex("X_w1"), g.vertex("Y_b1")));
  EXPECT_TRUE(recognize_bmg(g).is_bmg);
}

TEST(BmgSpecial, Preconditions) {
  std::vector<ColoredDigraph> one{make_biclique("X", 1, 1)};
  EXPECT_EQ(code_of([&] { bmg_special(one, 0); }), ErrorCode::BadComponents);
  std::vector<ColoredDigraph> not_clique{make_biclique("X", 1, 1),
                                         ColoredDigraph({{"a", "black"}, {"b", "white"}}, {{"a", "b"}})};
  EXPECT_EQ(code_of([&] { bmg_special(not_clique, 0); }), ErrorCode::BadComponents);
}

TEST(BmgSpecial, LargerComponentsStayBmg) {
  std::vector<ColoredDigraph> comps{make_biclique("A", 2, 3), make_biclique("B", 1, 2), make_biclique("C", 3, 1)};
  for (std::size_t i = 0; i < comps.size(); ++i) EXPECT_TRUE(recognize_bmg(bmg_special(comps, i)).is_bmg);
}

TEST(X3cGadget, Constants) {
  X3cInstance inst{{"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b", "c"}}};
  auto g = x3c_gadget(inst);
  EXPECT_EQ(g.r, 18U);
  EXPECT_EQ(g.q_const, 324U);
  EXPECT_EQ(g.k, 108U);
  EXPECT_EQ(g.graph.size(), 1374U);
  EXPECT_TRUE(g.faithful);
}

TEST(X3cGadget, ScaledIsMarked) {
  X3cInstance inst{{"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"d", "e", "f"}, {"a", "d", "e"}}};
  auto g = x3c_gadget(inst, GadgetScale{2, 3});
  EXPECT_FALSE(g.faithful);
  EXPECT_EQ(g.graph.size(), 12U + 3 * (4 + 6));
  auto f = cover_edit_set(g, {0, 1});
  EXPECT_TRUE(verify_edit(g.graph, f));
  EXPECT_EQ(f.size(), *g.k);
}

TEST(X3cGadget, BadInputs) {
  X3cInstance bad{{"a", "b"}, {{"a", "b", "a"}}};
  EXPECT_EQ(code_of([&] { x3c_gadget(bad); }), ErrorCode::BadInstance);
  X3cInstance inst{{"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"d", "e", "f"}, {"a", "d", "e"}}};
  auto g = x3c_gadget(inst, GadgetScale{1, 1});
  EXPECT_EQ(code_of([&] { cover_edit_set(g, {0, 2}); }), ErrorCode::NotAnExactCover);
  EXPECT_EQ(code_of([&] { cover_edit_set(g, {0}); }), ErrorCode::NotAnExactCover);
}

TEST(CgcGadget, SmallestCase) {
  BipartiteGraph u{{"p"}, {"q"}, {}};
  auto g = cgc_gadget(u).graph;
  EXPECT_EQ(g.size(), 5U);
  std::set<std::pair<std::string, std::string>> arcs;
  for (const Arc& a : g.arcs()) arcs.insert({g.id(a.from), g.id(a.to)});
  EXPECT_EQ(arcs, (std::set<std::pair<std::string, std::string>>{
                      {"q1", "r1"}, {"r1", "q1"}, {"p1", "w"}, {"w", "b"}, {"b", "w"}}));
}

TEST(CgcGadget, IndependentEdgesGiveF3) {
  BipartiteGraph u{{"p1", "p2"}, {"q1", "q2"}, {{0, 0}, {1, 1}}};
  EXPECT_FALSE(is_chain_graph(u));
  auto gadget = cgc_gadget(u);
  const auto& g = gadget.graph;
  std::vector<WitnessKind> only{WitnessKind::F3};
  bool found = false;
  for (const auto& w : scan_forbidden_subgraphs(g, only)) {
    std::set<std::string> ids;
    for (Vertex v : w.vertices) ids.insert(g.id(v));
    found = found || ids == std::set<std::string>{"p1", "p2", "q1", "q2", "w"};
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(recognize_bmg(g).is_bmg);
}

TEST(CgcGadget, ChainGraphGivesBmg) {
  BipartiteGraph u{{"p1", "p2"}, {"q1", "q2"}, {{0, 0}, {0, 1}, {1, 1}}};
  EXPECT_TRUE(is_chain_graph(u));
  auto g = cgc_gadget(u).graph;
  EXPECT_TRUE(recognize_bmg(g).is_bmg);
  EXPECT_EQ(solve_exact(g, EditMode::Completion).optimal_cost, 0U);
}

TEST(CgcGadget, EmptyPart) {
  EXPECT_EQ(code_of([] { cgc_gadget(BipartiteGraph{{}, {"q"}, {}}); }), ErrorCode::EmptyPart);
}

TEST(ChainCompletion, SmallestFix) {
  BipartiteGraph u{{"p1", "p2"}, {"q1", "q2"}, {{0, 0}, {1, 1}}};
  auto added = min_chain_completion(u, 3);
  ASSERT_TRUE(added);
  EXPECT_EQ(added->size(), 1U);
  EXPECT_FALSE(min_chain_completion(u, 0));
}

TEST(HubExtension, KeepsBmg) {
  auto g = bmg_from_tree(random_colored_tree(6, 2, 4));
  auto h = hub_extension(g, 1);
  EXPECT_EQ(h.num_colors(), 3U);
  EXPECT_TRUE(recognize_bmg(h).is_bmg);
}

TEST(HubExtension, KeepsEditCost) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto base = bmg_from_tree(random_colored_tree(5, 2, seed));
    auto p = perturb(base, 2, seed, EditMode::Editing);
    EXPECT_EQ(solve_exact(hub_extension(p.graph, 1), EditMode::Editing).optimal_cost,
              solve_exact(p.graph, EditMode::Editing).optimal_cost);
  }
}
