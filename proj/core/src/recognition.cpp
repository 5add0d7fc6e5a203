#include "bmg/recognition.hpp"

#include <algorithm>

#include "bmg/error.hpp"
#include "bmg/triples.hpp"
#include "pattern_match.hpp"

namespace bmg {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::F1: return "F1";
    case WitnessKind::F2: return "F2";
    case WitnessKind::F3: return "F3";
    case WitnessKind::Hourglass: return "hourglass";
    case WitnessKind::Sink: return "sink";
  }
  return "F1";
}

std::optional<WitnessKind> parse_witness_kind(std::string_view text) {
  if (text == "F1" || text == "f1") return WitnessKind::F1;
  if (text == "F2" || text == "f2") return WitnessKind::F2;
  if (text == "F3" || text == "f3") return WitnessKind::F3;
  if (text == "hourglass") return WitnessKind::Hourglass;
  if (text == "sink") return WitnessKind::Sink;
  return std::nullopt;
}

std::string_view to_string(FailureReason reason) {
  return reason == FailureReason::NotSfColored ? "not_sf_colored" : "triples_incompatible";
}

namespace {

std::vector<VertexSpec> vertex_specs(const ColoredDigraph& g) {
  std::vector<VertexSpec> specs;
  specs.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) specs.push_back({g.id(v), g.color_name(g.color(v))});
  return specs;
}

void require_two_colored(const ColoredDigraph& g) {
  if (g.num_colors() != 2) {
    throw Error(ErrorCode::NotTwoColored,
                "expected 2 colors, found " + std::to_string(g.num_colors()));
  }
  if (!is_properly_colored(g)) throw Error(ErrorCode::NotTwoColored, "coloring is not proper");
}

}  // namespace

RecognitionResult recognize_bmg(const ColoredDigraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  RecognitionResult result;
  if (!is_sf_colored(g)) {
    result.failure_reason = FailureReason::NotSfColored;
    return result;
  }
  // One color (sf-colored means arcless) or one vertex per color (sf-colored
  // means complete): no triples at all, any tree on V explains g.
  if (g.num_colors() == 1 || g.num_colors() == g.size()) {
    result.is_bmg = true;
    result.explaining_tree = TreeBuilder::star(vertex_specs(g));
    return result;
  }
  auto tree = build_from_graph(g, TripleRule::WithForbidden);
  if (!tree) {
    result.failure_reason = FailureReason::TriplesIncompatible;
    return result;
  }
  result.is_bmg = true;
  result.explaining_tree = std::move(tree);
  return result;
}

bool recognize_bmg_via_aho(const ColoredDigraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  auto tree = build_from_graph(g, TripleRule::InformativeOnly);
  return tree && bmg_from_tree(*tree) == g;
}

std::vector<ForbiddenWitness> scan_forbidden_subgraphs(const ColoredDigraph& g,
                                                       std::span<const WitnessKind> kinds) {
  require_two_colored(g);
  std::vector<ForbiddenWitness> out;
  for (WitnessKind kind : kinds) {
    if (kind != WitnessKind::F1 && kind != WitnessKind::F2 && kind != WitnessKind::F3) {
      continue;
    }
    const auto& t = detail::template_for(kind);
    for (auto [c0, c1] : {std::pair<Color, Color>{0, 1}, {1, 0}}) {
      detail::match_template(g, t, c0, c1, [&](std::span<const Vertex> tuple) {
        out.push_back({kind, {tuple.begin(), tuple.end()}});
        return true;
      });
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ForbiddenWitness> find_forbidden_witness(const ColoredDigraph& g, Color a, Color b) {
  std::optional<ForbiddenWitness> found;
  for (WitnessKind kind : kAllForbidden) {
    const auto& t = detail::template_for(kind);
    for (auto [c0, c1] : {std::pair<Color, Color>{a, b}, {b, a}}) {
      detail::match_template(g, t, c0, c1, [&](std::span<const Vertex> tuple) {
        found = ForbiddenWitness{kind, {tuple.begin(), tuple.end()}};
        return false;
      });
      if (found) return found;
    }
  }
  return found;
}

namespace {

using Set = std::vector<char>;

bool disjoint(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

Set step(const ColoredDigraph& g, const Set& from) {
  Set out(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!from[v]) continue;
    for (Vertex w : g.out(v)) out[w] = 1;
  }
  return out;
}

}  // namespace

AxiomReport check_neighborhood_axioms(const ColoredDigraph& g) {
  require_two_colored(g);
  if (connected_components(g).size() != 1) {
    throw Error(ErrorCode::NotConnected, "axioms are only defined for connected graphs");
  }
  struct ClassSets {
    Set members, n, n_in, nn, nnn;
  };
  std::vector<ClassSets> sets;
  for (const auto& cls : thinness_classes(g)) {
    ClassSets s;
    s.members.assign(g.size(), 0);
    s.n_in.assign(g.size(), 0);
    for (Vertex v : cls) s.members[v] = 1;
    // Members share their neighborhoods; one representative suffices.
    for (Vertex w : g.in(cls.front())) s.n_in[w] = 1;
    s.n = step(g, s.members);
    s.nn = step(g, s.n);
    s.nnn = step(g, s.nn);
    sets.push_back(std::move(s));
  }

  AxiomReport r;
  for (const auto& a : sets) {
    if (std::find(a.n.begin(), a.n.end(), 1) == a.n.end()) r.n0 = false;
    if (!subset(a.nnn, a.n)) r.n2 = false;
    for (const auto& b : sets) {
      if (disjoint(a.members, b.n) && disjoint(b.members, a.n)) {
        if (!disjoint(a.n, b.nn) || !disjoint(b.n, a.nn)) r.n1 = false;
      }
      if (disjoint(a.members, b.nn) && disjoint(b.members, a.nn) && !disjoint(a.n, b.n)) {
        if (a.n_in != b.n_in || !(subset(a.n, b.n) || subset(b.n, a.n))) r.n3 = false;
      }
    }
  }
  return r;
}

bool is_2bmg_via_forbidden(const ColoredDigraph& g) {
  require_two_colored(g);
  return is_sf_colored(g) && !find_forbidden_witness(g, 0, 1);
}

std::vector<ForbiddenWitness> scan_hourglasses(const ColoredDigraph& g) {
  if (!is_properly_colored(g)) {
    throw Error(ErrorCode::NotProperlyColored, "hourglass scan needs a proper coloring");
  }
  std::vector<ForbiddenWitness> out;
  const auto& t = detail::template_for(WitnessKind::Hourglass);
  for (Color a = 0; a < g.num_colors(); ++a) {
    for (Color b = 0; b < g.num_colors(); ++b) {
      if (a == b) continue;
      detail::match_template(g, t, a, b, [&](std::span<const Vertex> tuple) {
        out.push_back({WitnessKind::Hourglass, {tuple.begin(), tuple.end()}});
        return true;
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_binary_explainable(const ColoredDigraph& g) {
  if (!recognize_bmg(g).is_bmg) throw Error(ErrorCode::NotABmg, "graph is not a best match graph");
  const auto& t = detail::template_for(WitnessKind::Hourglass);
  bool found = false;
  for (Color a = 0; a < g.num_colors() && !found; ++a) {
    for (Color b = 0; b < g.num_colors() && !found; ++b) {
      if (a == b) continue;
      detail::match_template(g, t, a, b, [&](std::span<const Vertex>) {
        found = true;
        return false;
      });
    }
  }
  return !found;
}

bool matches_witness(const ColoredDigraph& g, const ForbiddenWitness& w) {
  if (w.kind == WitnessKind::Sink) {
    if (w.vertices.size() != 1 || w.vertices.front() >= g.size()) return false;
    const Vertex x = w.vertices.front();
    std::vector<char> seen(g.num_colors(), 0);
    seen[g.color(x)] = 1;
    for (Vertex y : g.out(x)) seen[g.color(y)] = 1;
    return std::find(seen.begin(), seen.end(), 0) != seen.end();
  }
  return detail::satisfies(g, detail::template_for(w.kind), w.vertices);
}

}  // namespace bmg
