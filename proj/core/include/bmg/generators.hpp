#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmg/colored_digraph.hpp"
#include "bmg/phylo_tree.hpp"

namespace bmg {

/// Leaves "v<i>" colored "c<j>" (zero padded); every color is used. Each
/// inner vertex splits its leaves into two parts, or with probability
/// `multifurcation` into three or more. Throws BadParameters unless
/// n >= colors >= 1.
PhyloTree random_colored_tree(std::size_t n, std::size_t colors, std::uint64_t seed,
                              double multifurcation = 0.2);

struct Perturbation {
  ColoredDigraph graph;
  EditSet edits;
};

/// Flips `flips` distinct cross-color pairs chosen uniformly among those the
/// mode allows. Throws NotEnoughPairs.
Perturbation perturb(const ColoredDigraph& g, std::size_t flips, std::uint64_t seed, EditMode mode);

/// Complete bipartite digraph with ids "<prefix>_b<j>" / "<prefix>_w<j>".
ColoredDigraph make_biclique(const std::string& prefix, std::size_t black, std::size_t white,
                             const std::string& black_color = "black",
                             const std::string& white_color = "white");

/// Disjoint union of bi-cliques plus arcs from every vertex of component
/// `chosen` to every differently colored vertex elsewhere. Throws
/// BadComponents.
ColoredDigraph bmg_special(const std::vector<ColoredDigraph>& components, std::size_t chosen);

struct X3cInstance {
  std::vector<std::string> universe;
  std::vector<std::array<std::string, 3>> subsets;

  std::size_t t() const noexcept { return universe.size() / 3; }
  std::size_t m() const noexcept { return subsets.size(); }
};

/// Sizes replacing r (per color in each X_i) and q (per color in each Y_i).
struct GadgetScale {
  std::size_t x_half = 0;
  std::size_t y_half = 0;
};

struct BipartiteGraph {
  std::vector<std::string> p;
  std::vector<std::string> q;
  /// (index into p, index into q)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct GadgetOutput {
  ColoredDigraph graph;
  std::optional<std::size_t> k;
  std::map<std::string, std::string> role_map;
  std::optional<std::size_t> r;
  std::optional<std::size_t> q_const;
  /// False when a scale replaced the proof's sizes.
  bool faithful = true;
  std::optional<X3cInstance> instance;
};

/// Throws BadInstance. Subsets need not be distinct (with t = 1 there is
/// only one 3-subset of the universe).
GadgetOutput x3c_gadget(const X3cInstance& inst, std::optional<GadgetScale> scale = std::nullopt);

/// Deletion set built from an exact cover (indices into the subsets).
/// Throws NotAnExactCover or BadInstance.
EditSet cover_edit_set(const GadgetOutput& gadget, const std::vector<std::size_t>& cover);

/// Throws EmptyPart.
GadgetOutput cgc_gadget(const BipartiteGraph& u);

/// No two edges {p1,q1}, {p2,q2} with {p1,q2} and {p2,q1} both missing.
bool is_chain_graph(const BipartiteGraph& u);

/// Smallest set of added edges making u a chain graph, searched by
/// cardinality up to `max_added`.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> min_chain_completion(
    const BipartiteGraph& u, std::size_t max_added);

/// Adds one vertex per new color with arcs to and from every other vertex.
/// New ids and colors are "h<i>" / "hub<i>", primed until unused.
ColoredDigraph hub_extension(const ColoredDigraph& g, std::size_t extra_colors);

}  // namespace bmg
