#pragma once

#include <string>
#include <string_view>

#include "bmg/colored_digraph.hpp"
#include "bmg/generators.hpp"
#include "bmg/phylo_tree.hpp"

namespace bmg {

/// "#bmg v1" followed by "V <id> <color>" and "A <src> <dst>" records, one
/// per line. Blank lines and lines starting with '#' are skipped. Throws
/// ParseError, DuplicateRecord or UnknownVertexInArc, all with line numbers.
ColoredDigraph parse_graph(std::string_view text);
/// Vertices by id, arcs by (src, dst).
std::string serialize_graph(const ColoredDigraph& g);

/// Newick-like: leaves "<id>|<color>", unlabeled inner nodes, trailing ';'.
/// Throws ParseError or NotPhylogenetic.
PhyloTree parse_tree(std::string_view text);
std::string serialize_tree(const PhyloTree& tree);

/// First line "t m", then m lines of three element names. Throws ParseError.
X3cInstance parse_x3c(std::string_view text);

/// Lines "P <names...>", "Q <names...>" and "E <p> <q>". Throws ParseError.
BipartiteGraph parse_bipartite(std::string_view text);

}  // namespace bmg
