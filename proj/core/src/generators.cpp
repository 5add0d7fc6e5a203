#include <algorithm>
#include <functional>
#include <numeric>

#include "bmg/error.hpp"
#include "bmg/generators.hpp"
#include "bmg/rng.hpp"

namespace bmg {

namespace {

std::string padded(char prefix, std::size_t i, std::size_t count) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return std::string(1, prefix) + std::string(width - std::min(width, digits.size()), '0') + digits;
}

template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

PhyloTree random_colored_tree(std::size_t n, std::size_t colors, std::uint64_t seed,
                              double multifurcation) {
  if (colors < 1 || n < colors) {
    throw Error(ErrorCode::BadParameters, "need n >= colors >= 1, got n=" + std::to_string(n) +
                                              " colors=" + std::to_string(colors));
  }
  SplitMix64 rng(seed);
  std::vector<std::size_t> color_of(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  for (std::size_t i = 0; i < n; ++i) color_of[order[i]] = i < colors ? i : rng.below(colors);

  TreeBuilder b;
  std::function<void(std::vector<std::size_t>, NodeId, bool)> grow =
      [&](std::vector<std::size_t> leaves, NodeId parent, bool is_root) {
        if (leaves.size() == 1) {
          b.add_leaf(parent, padded('v', leaves[0], n), padded('c', color_of[leaves[0]], colors));
          return;
        }
        std::size_t parts = 2;
        if (leaves.size() >= 3 && rng.uniform() < multifurcation) {
          parts = 3 + rng.below(leaves.size() - 2);
        }
        shuffle(leaves, rng);
        std::vector<std::vector<std::size_t>> groups(parts);
        for (std::size_t i = 0; i < leaves.size(); ++i) {
          groups[i < parts ? i : rng.below(parts)].push_back(leaves[i]);
        }
        NodeId node = is_root ? parent : b.add_inner(parent);
        for (auto& g : groups) {
          std::sort(g.begin(), g.end());
          grow(std::move(g), node, false);
        }
      };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  grow(std::move(all), b.root(), true);
  return std::move(b).build();
}

Perturbation perturb(const ColoredDigraph& g, std::size_t flips, std::uint64_t seed, EditMode mode) {
  std::vector<Arc> pool;
  for (const Arc& p : cross_color_pairs(g)) {
    const bool arc = g.has_arc(p.from, p.to);
    if (mode == EditMode::Editing || (mode == EditMode::Deletion) == arc) pool.push_back(p);
  }
  if (flips > pool.size()) {
    throw Error(ErrorCode::NotEnoughPairs, "asked for " + std::to_string(flips) + " flips, only " +
                                               std::to_string(pool.size()) + " pairs available");
  }
  SplitMix64 rng(seed);
  EditSet edits;
  edits.mode = mode;
  for (std::size_t i = 0; i < flips; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    edits.pairs.insert(pool[i]);
  }
  return {apply_edit(g, edits), std::move(edits)};
}

ColoredDigraph make_biclique(const std::string& prefix, std::size_t black, std::size_t white,
                             const std::string& black_color, const std::string& white_color) {
  std::vector<VertexSpec> specs;
  std::vector<std::string> bs, ws;
  for (std::size_t j = 1; j <= black; ++j) {
    bs.push_back(prefix + "_b" + std::to_string(j));
    specs.push_back({bs.back(), black_color});
  }
  for (std::size_t j = 1; j <= white; ++j) {
    ws.push_back(prefix + "_w" + std::to_string(j));
    specs.push_back({ws.back(), white_color});
  }
  std::vector<ArcSpec> arcs;
  for (const auto& x : bs) {
    for (const auto& y : ws) {
      arcs.emplace_back(x, y);
      arcs.emplace_back(y, x);
    }
  }
  return ColoredDigraph(std::move(specs), arcs);
}

ColoredDigraph bmg_special(const std::vector<ColoredDigraph>& components, std::size_t chosen) {
  if (components.size() < 2) throw Error(ErrorCode::BadComponents, "need at least two components");
  if (chosen >= components.size()) throw Error(ErrorCode::BadComponents, "chosen index out of range");
  const auto& first = components.front();
  if (first.num_colors() != 2) throw Error(ErrorCode::BadComponents, "components must be 2-colored");
  const std::string c0 = first.color_name(0);
  const std::string c1 = first.color_name(1);

  std::vector<VertexSpec> specs;
  std::vector<ArcSpec> arcs;
  for (const auto& comp : components) {
    if (comp.num_colors() != 2 || comp.color_name(0) != c0 || comp.color_name(1) != c1) {
      throw Error(ErrorCode::BadComponents, "components must share the same two colors");
    }
    if (comp.num_arcs() != cross_color_pairs(comp).size()) {
      throw Error(ErrorCode::BadComponents, "component is not a bi-clique");
    }
    for (Vertex v = 0; v < comp.size(); ++v) specs.push_back({comp.id(v), comp.color_name(comp.color(v))});
    for (const Arc& a : comp.arcs()) arcs.emplace_back(comp.id(a.from), comp.id(a.to));
  }
  const auto& x = components[chosen];
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i == chosen) continue;
    for (Vertex u = 0; u < x.size(); ++u) {
      for (Vertex v = 0; v < components[i].size(); ++v) {
        if (x.color_name(x.color(u)) != components[i].color_name(components[i].color(v))) {
          arcs.emplace_back(x.id(u), components[i].id(v));
        }
      }
    }
  }
  try {
    return ColoredDigraph(std::move(specs), arcs);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadComponents, std::string("components overlap: ") + e.what());
  }
}

ColoredDigraph hub_extension(const ColoredDigraph& g, std::size_t extra_colors) {
  std::vector<VertexSpec> specs;
  std::vector<ArcSpec> arcs;
  for (Vertex v = 0; v < g.size(); ++v) specs.push_back({g.id(v), g.color_name(g.color(v))});
  for (const Arc& a : g.arcs()) arcs.emplace_back(g.id(a.from), g.id(a.to));

  for (std::size_t i = 1; i <= extra_colors; ++i) {
    std::string id = "h" + std::to_string(i);
    while (g.find(id)) id += "'";
    std::string color = "hub" + std::to_string(i);
    while (g.find_color(color)) color += "'";
    for (std::size_t j = 0; j < specs.size(); ++j) {
      arcs.emplace_back(id, specs[j].id);
      arcs.emplace_back(specs[j].id, id);
    }
    specs.push_back({std::move(id), std::move(color)});
  }
  return ColoredDigraph(std::move(specs), arcs);
}

}  // namespace bmg
