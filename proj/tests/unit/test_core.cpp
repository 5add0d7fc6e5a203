#include <gtest/gtest.h>

#include <algorithm>

#include "bmg/colored_digraph.hpp"
#include "bmg/error.hpp"

using namespace bmg;

namespace {

ColoredDigraph two(std::initializer_list<ArcSpec> arcs) {
  return ColoredDigraph({{"a", "red"}, {"b", "blue"}}, arcs);
}

std::vector<std::vector<std::string>> named(const ColoredDigraph& g, std::vector<std::vector<Vertex>> parts) {
  std::vector<std::vector<std::string>> out;
  for (auto& p : parts) {
    std::vector<std::string> ids;
    for (Vertex v : p) ids.push_back(g.id(v));
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ColoredDigraph, VerticesAreSortedById) {
  ColoredDigraph g({{"z", "A"}, {"a", "B"}, {"m", "A"}}, {{"z", "a"}});
  EXPECT_EQ(g.id(0), "a");
  EXPECT_EQ(g.id(2), "z");
  EXPECT_TRUE(g.has_arc(g.vertex("z"), g.vertex("a")));
  EXPECT_FALSE(g.has_arc(g.vertex("a"), g.vertex("z")));
  EXPECT_EQ(g.num_colors(), 2U);
  EXPECT_EQ(g.num_arcs(), 1U);
}

TEST(ColoredDigraph, RejectsBadInput) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([] { ColoredDigraph({{"a", "A"}, {"a", "B"}}, {}); }), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code([] { ColoredDigraph({{"a", "A"}}, {{"a", "b"}}); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code([] { ColoredDigraph({{"a", "A"}}, {{"a", "a"}}); }), ErrorCode::SelfLoop);
}

TEST(ValidateColoring, CompleteTwoColoring) {
  auto r = validate_coloring(two({{"a", "b"}, {"b", "a"}}));
  EXPECT_TRUE(r.proper);
  EXPECT_TRUE(r.sink_free);
}

TEST(ValidateColoring, SinkWitness) {
  auto g = two({{"a", "b"}});
  auto r = validate_coloring(g);
  EXPECT_TRUE(r.proper);
  EXPECT_FALSE(r.sink_free);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_EQ(g.id(r.witnesses[0].vertex), "b");
  EXPECT_EQ(g.color_name(r.witnesses[0].missing), "red");
}

TEST(ValidateColoring, SameColorArc) {
  ColoredDigraph g({{"a", "red"}, {"b", "red"}}, {{"a", "b"}});
  EXPECT_FALSE(validate_coloring(g).proper);
  EXPECT_FALSE(is_properly_colored(g));
  EXPECT_FALSE(is_sf_colored(g));
}

TEST(Thinness, EdgelessIsOneClass) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"c", "A"}}, {});
  EXPECT_EQ(named(g, thinness_classes(g)), (std::vector<std::vector<std::string>>{{"a", "b", "c"}}));
}

TEST(Thinness, SingleArcSeparatesAll) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"c", "A"}}, {{"a", "b"}});
  EXPECT_EQ(thinness_classes(g).size(), 3U);
}

TEST(Thinness, BicliqueGivesTwoClasses) {
  ColoredDigraph g({{"x1", "red"}, {"x2", "red"}, {"y1", "blue"}, {"y2", "blue"}},
                   {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"},
                    {"y1", "x1"}, {"y1", "x2"}, {"y2", "x1"}, {"y2", "x2"}});
  EXPECT_EQ(named(g, thinness_classes(g)), (std::vector<std::vector<std::string>>{{"x1", "x2"}, {"y1", "y2"}}));
}

TEST(Components, WeakConnectivity) {
  ColoredDigraph g({{"a", "A"}, {"b", "B"}, {"c", "A"}, {"d", "B"}}, {{"a", "b"}, {"d", "c"}});
  EXPECT_EQ(named(g, connected_components(g)), (std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}}));
}

TEST(ApplyEdit, DeletionRemovesArc) {
  auto g = two({{"a", "b"}});
  EditSet f{EditMode::Deletion, {{g.vertex("a"), g.vertex("b")}}};
  EXPECT_EQ(apply_edit(g, f).num_arcs(), 0U);
}

TEST(ApplyEdit, CompletionAddsArc) {
  auto g = two({});
  EditSet f{EditMode::Completion, {{g.vertex("a"), g.vertex("b")}}};
  auto h = apply_edit(g, f);
  EXPECT_EQ(h.num_arcs(), 1U);
  EXPECT_TRUE(h.has_arc(h.vertex("a"), h.vertex("b")));
}

TEST(ApplyEdit, EmptySetIsIdentity) {
  auto g = two({{"a", "b"}});
  for (auto mode : {EditMode::Deletion, EditMode::Completion, EditMode::Editing}) {
    EXPECT_EQ(apply_edit(g, EditSet{mode, {}}), g);
  }
}

TEST(ApplyEdit, ModeViolations) {
  auto g = two({{"a", "b"}});
  const Arc ab{g.vertex("a"), g.vertex("b")};
  const Arc ba{g.vertex("b"), g.vertex("a")};
  EXPECT_THROW(apply_edit(g, EditSet{EditMode::Deletion, {ba}}), Error);
  EXPECT_THROW(apply_edit(g, EditSet{EditMode::Completion, {ab}}), Error);
  // Editing toggles either way.
  auto h = apply_edit(g, EditSet{EditMode::Editing, {ab, ba}});
  EXPECT_TRUE(h.has_arc(ba.from, ba.to));
  EXPECT_FALSE(h.has_arc(ab.from, ab.to));
}

TEST(ApplyEdit, UnknownVertex) {
  auto g = two({});
  try {
    apply_edit(g, EditSet{EditMode::Editing, {{0, 7}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVertex);
  }
}

TEST(CrossColorPairs, CountsOrderedPairs) {
  ColoredDigraph g({{"a", "A"}, {"b", "A"}, {"c", "B"}, {"d", "C"}}, {});
  // 4*3 ordered pairs minus the two same-colored ones.
  EXPECT_EQ(cross_color_pairs(g).size(), 10U);
}

TEST(EditModeNames, RoundTrip) {
  for (auto m : {EditMode::Deletion, EditMode::Completion, EditMode::Editing}) {
    EXPECT_EQ(parse_edit_mode(to_string(m)), m);
  }
  EXPECT_FALSE(parse_edit_mode("bogus"));
}
