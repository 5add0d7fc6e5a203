#include <gtest/gtest.h>

#include "bmg/error.hpp"
#include "bmg/io.hpp"
#include "bmg/triples.hpp"
#include "../support/oracles.hpp"

using namespace bmg;

namespace {

const std::vector<std::string> kAbc{"a", "b", "c"};

std::set<Triple> set_of(std::initializer_list<std::array<const char*, 3>> items) {
  std::set<Triple> out;
  for (const auto& t : items) out.insert(Triple::make(t[0], t[1], t[2]));
  return out;
}

}  // namespace

TEST(ExtractTriples, Informative) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"b2", "B"}}, {{"a", "b"}});
  auto tp = extract_triples(g);
  EXPECT_EQ(tp.informative, set_of({{"a", "b", "b2"}}));
  EXPECT_TRUE(tp.forbidden.empty());
}

TEST(ExtractTriples, Forbidden) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"b2", "B"}}, {{"a", "b"}, {"a", "b2"}});
  auto tp = extract_triples(g);
  EXPECT_TRUE(tp.informative.empty());
  EXPECT_EQ(tp.forbidden, set_of({{"a", "b", "b2"}, {"a", "b2", "b"}}));
}

TEST(ExtractTriples, NoTriplesForExtremeColorings) {
  auto one = bmg_from_tree(parse_tree("((a|A,b|A),c|A);"));
  auto tp = extract_triples(one);
  EXPECT_TRUE(tp.informative.empty() && tp.forbidden.empty());
  auto distinct = bmg_from_tree(parse_tree("((a|A,b|B),(c|C,d|D));"));
  tp = extract_triples(distinct);
  EXPECT_TRUE(tp.informative.empty() && tp.forbidden.empty());
}

TEST(BuildTree, SingleTriple) {
  auto t = build_tree(set_of({{"a", "b", "c"}}), kAbc);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, parse_tree("((a|-,b|-),c|-);"));
}

TEST(BuildTree, Incompatible) {
  EXPECT_FALSE(build_tree(set_of({{"a", "b", "c"}, {"b", "c", "a"}}), kAbc));
}

TEST(BuildTree, EmptyGivesStar) {
  auto t = build_tree({}, kAbc);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, parse_tree("(a|-,b|-,c|-);"));
}

TEST(BuildTree, UnknownLeaf) {
  try {
    build_tree(set_of({{"a", "b", "z"}}), kAbc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLeaf);
  }
}

TEST(Mtt, DirectContradiction) {
  EXPECT_FALSE(mtt(set_of({{"a", "b", "c"}}), set_of({{"a", "b", "c"}}), kAbc));
}

TEST(Mtt, AllForbiddenGivesStar) {
  auto t = mtt({}, set_of({{"a", "b", "c"}, {"a", "c", "b"}, {"b", "c", "a"}}), kAbc);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, parse_tree("(a|-,b|-,c|-);"));
}

TEST(Mtt, AgreesWithTreeEnumerationOnThreeLeaves) {
  // Every pair (R, F) of triple subsets on {a,b,c}: a tree exists iff one
  // of the four trees displays all of R and none of F.
  const std::vector<Triple> all{Triple::make("a", "b", "c"), Triple::make("a", "c", "b"),
                                Triple::make("b", "c", "a")};
  const std::vector<PhyloTree> trees{parse_tree("(a|-,b|-,c|-);"), parse_tree("((a|-,b|-),c|-);"),
                                     parse_tree("((a|-,c|-),b|-);"), parse_tree("((b|-,c|-),a|-);")};
  for (int rm = 0; rm < 8; ++rm) {
    for (int fm = 0; fm < 8; ++fm) {
      std::set<Triple> r, f;
      for (int i = 0; i < 3; ++i) {
        if (rm >> i & 1) r.insert(all[i]);
        if (fm >> i & 1) f.insert(all[i]);
      }
      bool expected = false;
      for (const auto& t : trees) {
        bool ok = true;
        for (const auto& x : r) ok = ok && displays(t, x);
        for (const auto& x : f) ok = ok && !displays(t, x);
        expected = expected || ok;
      }
      auto got = mtt(r, f, kAbc);
      ASSERT_EQ(got.has_value(), expected) << rm << " " << fm;
      if (got) {
        for (const auto& x : r) EXPECT_TRUE(displays(*got, x));
        for (const auto& x : f) EXPECT_FALSE(displays(*got, x));
      }
    }
  }
}

TEST(Mtt, InformativeAndForbiddenExample) {
  auto t = mtt(set_of({{"a", "b", "c"}}), set_of({{"a", "c", "b"}}), kAbc);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, parse_tree("((a|-,b|-),c|-);"));
}

TEST(BuildFromGraph, ExplainsGeneratedGraphs) {
  for (const char* text : {"((x|A,y|B),z|B);", "(x|A,y|B,(x2|A,y2|B));",
                           "(((a|A,b|B),(c|C,d|A)),((e|B,f|C),g|A));"}) {
    auto g = bmg_from_tree(parse_tree(text));
    auto t = build_from_graph(g, TripleRule::WithForbidden);
    ASSERT_TRUE(t) << text;
    EXPECT_EQ(oracle::bmg_mask(oracle::from_phylo(*t, g), oracle::color_vector(g)), oracle::graph_mask(g));
    // Aho on informative triples alone also explains BMGs.
    auto aho = build_from_graph(g, TripleRule::InformativeOnly);
    ASSERT_TRUE(aho) << text;
    EXPECT_EQ(bmg_from_tree(*aho), g);
  }
}
