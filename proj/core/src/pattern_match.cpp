#include "pattern_match.hpp"

namespace bmg::detail {

const Template& template_for(WitnessKind kind) {
  // roles: F1/F2 (x1,x2,y1,y2), F3 (x1,x2,y1,y2,y3), hourglass (x,x',y,y')
  static const Template f1{WitnessKind::F1, 4, {0, 0, 1, 1, 0},
                           {{0, 2}, {3, 1}, {2, 1}}, {{0, 3}, {3, 0}}, {0, 2, 1, 3, 0}};
  static const Template f2{WitnessKind::F2, 4, {0, 0, 1, 1, 0},
                           {{0, 2}, {2, 1}, {1, 3}}, {{0, 3}}, {0, 2, 1, 3, 0}};
  static const Template f3{WitnessKind::F3, 5, {0, 0, 1, 1, 1},
                           {{0, 2}, {1, 3}, {0, 4}, {1, 4}}, {{0, 3}, {1, 2}},
                           {0, 2, 4, 1, 3}, {0, 1}};
  static const Template hourglass{WitnessKind::Hourglass, 4, {0, 0, 1, 1, 0},
                                  {{0, 2}, {2, 0}, {1, 3}, {3, 1}, {0, 3}, {2, 1}},
                                  {{3, 0}, {1, 2}}, {0, 2, 1, 3, 0}, {0, 2}};
  switch (kind) {
    case WitnessKind::F1: return f1;
    case WitnessKind::F2: return f2;
    case WitnessKind::F3: return f3;
    default: return hourglass;
  }
}

namespace {

struct Step {
  int role;
  // How candidates are generated: from out(src) / in(src), or all vertices of
  // the side color when src < 0.
  int src = -1;
  bool src_out = true;
  std::vector<std::pair<int, bool>> need_out;  // (other, arc role->other required?)
  std::vector<std::pair<int, bool>> need_in;   // (other, arc other->role required?)
  int less_than = -1;
  int greater_than = -1;
};

std::vector<Step> plan(const Template& t) {
  std::vector<Step> steps;
  std::array<bool, 5> placed{};
  for (std::size_t d = 0; d < t.roles; ++d) {
    Step s;
    s.role = t.order[d];
    for (auto [a, b] : t.arcs) {
      if (s.src >= 0) break;
      if (b == s.role && placed[a]) {
        s.src = a;
        s.src_out = true;
      } else if (a == s.role && placed[b]) {
        s.src = b;
        s.src_out = false;
      }
    }
    for (auto [a, b] : t.arcs) {
      if (a == s.role && placed[b]) s.need_out.emplace_back(b, true);
      if (b == s.role && placed[a]) s.need_in.emplace_back(a, true);
    }
    for (auto [a, b] : t.non_arcs) {
      if (a == s.role && placed[b]) s.need_out.emplace_back(b, false);
      if (b == s.role && placed[a]) s.need_in.emplace_back(a, false);
    }
    if (t.less.first == s.role && placed[t.less.second]) s.less_than = t.less.second;
    if (t.less.second == s.role && placed[t.less.first]) s.greater_than = t.less.first;
    placed[s.role] = true;
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace

void match_template(const ColoredDigraph& g, const Template& t, Color c0, Color c1,
                    const std::function<bool(std::span<const Vertex>)>& visit) {
  const std::vector<Step> steps = plan(t);
  std::array<Vertex, 5> tuple{};
  const Color side_color[2] = {c0, c1};

  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth == steps.size()) return visit(std::span<const Vertex>(tuple.data(), t.roles));
    const Step& s = steps[depth];
    const Color want = side_color[t.side[s.role]];
    std::span<const Vertex> candidates;
    if (s.src < 0) {
      candidates = g.vertices_of_color(want);
    } else {
      candidates = s.src_out ? g.out(tuple[s.src]) : g.in(tuple[s.src]);
    }
    for (Vertex v : candidates) {
      if (g.color(v) != want) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) ok = tuple[steps[k].role] != v;
      for (auto [other, need] : s.need_out) {
        if (!ok) break;
        ok = g.has_arc(v, tuple[other]) == need;
      }
      for (auto [other, need] : s.need_in) {
        if (!ok) break;
        ok = g.has_arc(tuple[other], v) == need;
      }
      if (ok && s.less_than >= 0) ok = v < tuple[s.less_than];
      if (ok && s.greater_than >= 0) ok = v > tuple[s.greater_than];
      if (!ok) continue;
      tuple[s.role] = v;
      if (!dfs(depth + 1)) return false;
    }
    return true;
  };
  dfs(0);
}

bool satisfies(const ColoredDigraph& g, const Template& t, std::span<const Vertex> tuple) {
  if (tuple.size() != t.roles) return false;
  for (Vertex v : tuple) {
    if (v >= g.size()) return false;
  }
  for (std::size_t i = 0; i < t.roles; ++i) {
    for (std::size_t j = i + 1; j < t.roles; ++j) {
      if (tuple[i] == tuple[j]) return false;
      const bool same_side = t.side[i] == t.side[j];
      if (same_side != (g.color(tuple[i]) == g.color(tuple[j]))) return false;
    }
  }
  for (auto [a, b] : t.arcs) {
    if (!g.has_arc(tuple[a], tuple[b])) return false;
  }
  for (auto [a, b] : t.non_arcs) {
    if (g.has_arc(tuple[a], tuple[b])) return false;
  }
  return true;
}

}  // namespace bmg::detail
