#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmg {

/// Dense vertex index. Indices follow lexicographic order of the vertex ids.
using Vertex = std::uint32_t;
/// Interned color. Color ids follow lexicographic order of the color names.
using Color = std::uint32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct VertexSpec {
  std::string id;
  std::string color;
};

using ArcSpec = std::pair<std::string, std::string>;

/// Simple loop-free digraph with a total vertex coloring. Immutable once
/// built; derived graphs share the vertex table.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(std::vector<VertexSpec> vertices, std::span<const ArcSpec> arcs);
  ColoredDigraph(std::vector<VertexSpec> vertices,
                 std::initializer_list<ArcSpec> arcs)
      : ColoredDigraph(std::move(vertices),
                       std::span<const ArcSpec>(arcs.begin(), arcs.size())) {}

  std::size_t size() const noexcept { return out_.size(); }
  bool empty() const noexcept { return out_.empty(); }
  std::size_t num_arcs() const noexcept { return num_arcs_; }
  std::size_t num_colors() const noexcept;

  const std::string& id(Vertex v) const;
  std::optional<Vertex> find(std::string_view id) const;
  /// Throws Error{UnknownVertex}.
  Vertex vertex(std::string_view id) const;

  Color color(Vertex v) const;
  const std::string& color_name(Color c) const;
  std::optional<Color> find_color(std::string_view name) const;
  std::span<const Vertex> vertices_of_color(Color c) const;

  bool has_arc(Vertex from, Vertex to) const noexcept {
    return (bits_[from * words_ + (to >> 6)] >> (to & 63)) & 1U;
  }
  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  /// All arcs sorted by (from, to).
  std::vector<Arc> arcs() const;

  /// Same vertices and coloring, replacement arc set.
  ColoredDigraph with_arcs(std::span<const Arc> arcs) const;
  /// Induced subgraph; the coloring is restricted to its image on `keep`.
  ColoredDigraph induced(std::span<const Vertex> keep) const;
  bool shares_vertex_table(const ColoredDigraph& other) const noexcept {
    return table_ == other.table_;
  }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b);

 private:
  struct VertexTable {
    std::vector<std::string> ids;
    std::vector<Color> colors;
    std::vector<std::string> color_names;
    std::vector<std::vector<Vertex>> by_color;
  };

  ColoredDigraph(std::shared_ptr<const VertexTable> table, std::span<const Arc> arcs);
  void assign_arcs(std::span<const Arc> arcs);

  std::shared_ptr<const VertexTable> table_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t num_arcs_ = 0;
};

struct ColorWitness {
  Vertex vertex = 0;
  Color missing = 0;
  friend auto operator<=>(const ColorWitness&, const ColorWitness&) = default;
};

struct ColoringReport {
  bool proper = true;
  bool sink_free = true;
  /// Every (x, s) such that x has no out-neighbor of color s != color(x).
  std::vector<ColorWitness> witnesses;
  /// Arcs joining two vertices of the same color.
  std::vector<Arc> improper_arcs;
};

ColoringReport validate_coloring(const ColoredDigraph& g);
bool is_properly_colored(const ColoredDigraph& g);
bool is_sf_colored(const ColoredDigraph& g);

/// Classes of x ~ y iff N(x) = N(y) and N^-(x) = N^-(y), each sorted, ordered
/// by smallest member.
std::vector<std::vector<Vertex>> thinness_classes(const ColoredDigraph& g);

/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const ColoredDigraph& g);

enum class EditMode { Deletion, Completion, Editing };

std::string_view to_string(EditMode mode);
std::optional<EditMode> parse_edit_mode(std::string_view text);

struct EditSet {
  EditMode mode = EditMode::Editing;
  std::set<Arc> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  friend bool operator==(const EditSet&, const EditSet&) = default;
};

/// G - F, G + F or G xor F depending on the mode. Throws ModeViolation,
/// UnknownVertex or SelfLoop.
ColoredDigraph apply_edit(const ColoredDigraph& g, const EditSet& edits);

/// Ordered pairs (x, y) with color(x) != color(y), sorted.
std::vector<Arc> cross_color_pairs(const ColoredDigraph& g);

}  // namespace bmg
