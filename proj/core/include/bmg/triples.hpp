#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bmg/colored_digraph.hpp"
#include "bmg/phylo_tree.hpp"

namespace bmg {

struct TriplePair {
  std::set<Triple> informative;
  std::set<Triple> forbidden;
  std::vector<std::string> leaf_universe;
};

/// Informative and forbidden triples of a colored digraph.
TriplePair extract_triples(const ColoredDigraph& g);

/// Leaves are given as (id, color); colors are carried into the result. Both
/// functions throw UnknownLeaf if a triple mentions a leaf outside `leaves`.
std::optional<PhyloTree> build_tree(const std::set<Triple>& r, std::span<const VertexSpec> leaves);
std::optional<PhyloTree> mtt(const std::set<Triple>& r, const std::set<Triple>& f,
                             std::span<const VertexSpec> leaves);

/// Convenience overloads for uncolored leaf sets (every leaf gets color "-").
std::optional<PhyloTree> build_tree(const std::set<Triple>& r, std::span<const std::string> leaves);
std::optional<PhyloTree> mtt(const std::set<Triple>& r, const std::set<Triple>& f,
                             std::span<const std::string> leaves);

enum class TripleRule { InformativeOnly, WithForbidden };

/// Same result as build_tree / mtt applied to extract_triples(g), computed
/// from the adjacency structure without listing the triples. Expects a
/// properly colored graph; same-colored arcs are ignored.
std::optional<PhyloTree> build_from_graph(const ColoredDigraph& g, TripleRule rule);

}  // namespace bmg
