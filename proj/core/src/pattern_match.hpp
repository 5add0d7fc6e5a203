#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bmg/recognition.hpp"

namespace bmg::detail {

/// Induced-subgraph template on two color sides. Roles are listed in witness
/// order; `order` is the search order, chosen so that every role after the
/// first is reachable from an earlier one through a required arc.
struct Template {
  WitnessKind kind;
  std::size_t roles;
  std::array<std::uint8_t, 5> side;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> non_arcs;
  std::array<int, 5> order;
  /// Extra canonical-form constraint: tuple[lo] < tuple[hi].
  std::pair<int, int> less{-1, -1};
};

const Template& template_for(WitnessKind kind);

/// Calls `visit` for every role assignment with side 0 on color `c0` and side
/// 1 on color `c1`; enumeration stops when `visit` returns false. Vertices of
/// other colors are ignored, so this matches in the induced 2-colored
/// subgraph.
void match_template(const ColoredDigraph& g, const Template& t, Color c0, Color c1,
                    const std::function<bool(std::span<const Vertex>)>& visit);

/// True iff the tuple satisfies the template's arcs and non-arcs.
bool satisfies(const ColoredDigraph& g, const Template& t, std::span<const Vertex> tuple);

}  // namespace bmg::detail
