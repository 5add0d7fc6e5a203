#include <gtest/gtest.h>

#include "bmg/error.hpp"
#include "bmg/generators.hpp"
#include "bmg/io.hpp"

using namespace bmg;

namespace {

Error error_of(std::string_view text, bool tree = false) {
  try {
    if (tree) {
      parse_tree(text);
    } else {
      parse_graph(text);
    }
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no exception for: " << text;
  return Error(ErrorCode::ParseError, "none");
}

}  // namespace

TEST(ParseGraph, Minimal) {
  auto g = parse_graph("#bmg v1\nV a red\nV b blue\nA a b\n");
  EXPECT_EQ(g.size(), 2U);
  EXPECT_EQ(g.num_arcs(), 1U);
  EXPECT_TRUE(g.has_arc(g.vertex("a"), g.vertex("b")));
}

TEST(ParseGraph, CommentsAndBlankLines) {
  auto g = parse_graph("#bmg v1\n\n# vertices\nV a red\n  V b blue  \r\nA b a\n");
  EXPECT_EQ(g.size(), 2U);
  EXPECT_TRUE(g.has_arc(g.vertex("b"), g.vertex("a")));
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(error_of("V a red\n").code(), ErrorCode::ParseError);
  auto e = error_of("#bmg v1\nV a red\nA a b\n");
  EXPECT_EQ(e.code(), ErrorCode::UnknownVertexInArc);
  EXPECT_EQ(e.line(), 3U);
  e = error_of("#bmg v1\nV a red\nV a blue\n");
  EXPECT_EQ(e.code(), ErrorCode::DuplicateRecord);
  EXPECT_EQ(e.line(), 3U);
  EXPECT_EQ(error_of("#bmg v1\nV a red\nV b blue\nA a b\nA a b\n").code(), ErrorCode::DuplicateRecord);
  EXPECT_EQ(error_of("#bmg v1\nV a\n").line(), 2U);
  EXPECT_EQ(error_of("#bmg v1\nX a b\n").code(), ErrorCode::ParseError);
}

TEST(SerializeGraph, SortedAndRoundTrips) {
  auto g = parse_graph("#bmg v1\nV z red\nV a blue\nV m red\nA z a\nA a m\nA a z\n");
  EXPECT_EQ(serialize_graph(g), "#bmg v1\nV a blue\nV m red\nV z red\nA a m\nA a z\nA z a\n");
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
}

TEST(SerializeGraph, GadgetRoundTrip) {
  X3cInstance inst{{"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"d", "e", "f"}, {"a", "d", "e"}}};
  auto g = x3c_gadget(inst, GadgetScale{2, 2}).graph;
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  auto c = cgc_gadget(BipartiteGraph{{"p1", "p2"}, {"q1"}, {{0, 0}}}).graph;
  EXPECT_EQ(parse_graph(serialize_graph(c)), c);
}

TEST(ParseTree, Caterpillar) {
  auto t = parse_tree("((x|A,y|B),z|B);");
  EXPECT_EQ(t.num_leaves(), 3U);
  EXPECT_EQ(t.leaf_color(t.leaf("z")), "B");
  EXPECT_EQ(t.parent(t.leaf("z")), t.root());
  EXPECT_NE(t.parent(t.leaf("x")), t.root());
}

TEST(ParseTree, SingleLeaf) {
  auto t = parse_tree("(x|A);");
  EXPECT_EQ(t.num_leaves(), 1U);
  EXPECT_EQ(serialize_tree(t), "(x|A);");
}

TEST(ParseTree, Errors) {
  EXPECT_EQ(error_of("((x|A));", true).code(), ErrorCode::NotPhylogenetic);
  EXPECT_EQ(error_of("(x|A,y);", true).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of("(x|A,y|B)", true).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of("(x|A,(y|B,z|C);", true).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of("(x|A,x|B);", true).code(), ErrorCode::DuplicateLeaf);
}

TEST(SerializeTree, CanonicalRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_colored_tree(15, 3, seed, 0.4);
    const std::string text = serialize_tree(t);
    EXPECT_EQ(parse_tree(text), t);
    EXPECT_EQ(serialize_tree(parse_tree(text)), text);
  }
  EXPECT_EQ(serialize_tree(parse_tree("(z|B,(y|B,x|A));")), serialize_tree(parse_tree("((x|A,y|B),z|B);")));
}

TEST(ParseX3c, Basic) {
  auto inst = parse_x3c("2 3\na b c\nd e f\na d e\n");
  EXPECT_EQ(inst.t(), 2U);
  EXPECT_EQ(inst.m(), 3U);
  EXPECT_EQ(inst.universe, (std::vector<std::string>{"a", "b", "c", "d", "e", "f"}));
  EXPECT_THROW(parse_x3c("1 2\na b c\n"), Error);
  EXPECT_THROW(parse_x3c("1 1\na b\n"), Error);
  EXPECT_THROW(parse_x3c("x y\n"), Error);
}

TEST(ParseBipartite, Basic) {
  auto u = parse_bipartite("P p1 p2\nQ q1\nE p1 q1\nE p2 q1\n");
  EXPECT_EQ(u.p.size(), 2U);
  EXPECT_EQ(u.q.size(), 1U);
  EXPECT_EQ(u.edges.size(), 2U);
  EXPECT_THROW(parse_bipartite("P p1\nQ q1\nE p1 q9\n"), Error);
  EXPECT_THROW(parse_bipartite("P p1\nQ q1\nE p1 q1\nE p1 q1\n"), Error);
}
