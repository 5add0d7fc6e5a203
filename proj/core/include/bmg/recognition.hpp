#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bmg/colored_digraph.hpp"
#include "bmg/phylo_tree.hpp"

namespace bmg {

enum class WitnessKind { F1, F2, F3, Hourglass, Sink };

std::string_view to_string(WitnessKind kind);
std::optional<WitnessKind> parse_witness_kind(std::string_view text);

/// Vertices follow the template roles: F1/F2 (x1,x2,y1,y2), F3
/// (x1,x2,y1,y2,y3), hourglass (x,x',y,y'), sink (x).
struct ForbiddenWitness {
  WitnessKind kind = WitnessKind::F1;
  std::vector<Vertex> vertices;
  friend auto operator<=>(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

enum class FailureReason { NotSfColored, TriplesIncompatible };

std::string_view to_string(FailureReason reason);

struct RecognitionResult {
  bool is_bmg = false;
  std::optional<PhyloTree> explaining_tree;
  std::optional<FailureReason> failure_reason;
};

/// Throws EmptyGraph on a graph without vertices.
RecognitionResult recognize_bmg(const ColoredDigraph& g);
bool recognize_bmg_via_aho(const ColoredDigraph& g);

inline constexpr WitnessKind kAllForbidden[] = {WitnessKind::F1, WitnessKind::F2, WitnessKind::F3};

/// F3 witnesses are reported once per vertex set (x1 < x2). Throws
/// NotTwoColored unless g is properly colored with exactly two colors.
std::vector<ForbiddenWitness> scan_forbidden_subgraphs(const ColoredDigraph& g,
                                                       std::span<const WitnessKind> kinds = kAllForbidden);

/// First F1/F2/F3 witness (in that kind order) of the subgraph induced by
/// colors a and b, either orientation. No precondition checks.
std::optional<ForbiddenWitness> find_forbidden_witness(const ColoredDigraph& g, Color a, Color b);

struct AxiomReport {
  bool n0 = true;
  bool n1 = true;
  bool n2 = true;
  bool n3 = true;
  bool all() const noexcept { return n0 && n1 && n2 && n3; }
};

/// Throws NotTwoColored or NotConnected.
AxiomReport check_neighborhood_axioms(const ColoredDigraph& g);

/// Throws NotTwoColored.
bool is_2bmg_via_forbidden(const ColoredDigraph& g);

/// One witness per hourglass vertex set, with x < y. Throws NotProperlyColored.
std::vector<ForbiddenWitness> scan_hourglasses(const ColoredDigraph& g);

/// Throws NotABmg.
bool is_binary_explainable(const ColoredDigraph& g);

/// Re-checks a witness against its defining pattern.
bool matches_witness(const ColoredDigraph& g, const ForbiddenWitness& w);

struct ForbiddenCatalog {
  std::size_t f1_graphs = 0;
  std::size_t f2_graphs = 0;
  std::size_t f3_graphs = 0;
  std::size_t f1_iso_classes = 0;
  std::size_t f2_iso_classes = 0;
  std::size_t f1_f2_iso_classes = 0;
  std::size_t overlap = 0;
  std::size_t f3_iso_classes = 0;
  std::size_t f3_without_f1_f2 = 0;
  std::size_t nonredundant_total = 0;
  /// One graph per non-redundant class: F1/F2 classes first, then the F3
  /// classes free of induced F1/F2 graphs. Colors are named "A" and "B".
  std::vector<ColoredDigraph> representatives;
};

/// Isomorphism is color-preserving up to exchanging the two colors.
ForbiddenCatalog enumerate_forbidden_classes();

}  // namespace bmg
