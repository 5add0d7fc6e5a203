#include "bmg/colored_digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bmg/error.hpp"

namespace bmg {

ColoredDigraph::ColoredDigraph(std::vector<VertexSpec> vertices,
                               std::span<const ArcSpec> arcs) {
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].id == vertices[i - 1].id) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertices[i].id + "' declared twice");
    }
  }

  auto table = std::make_shared<VertexTable>();
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (const auto& v : vertices) names.push_back(v.color);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  table->color_names = std::move(names);
  table->by_color.resize(table->color_names.size());

  table->ids.reserve(vertices.size());
  table->colors.reserve(vertices.size());
  for (auto& v : vertices) {
    auto it = std::lower_bound(table->color_names.begin(), table->color_names.end(), v.color);
    auto c = static_cast<Color>(it - table->color_names.begin());
    table->by_color[c].push_back(static_cast<Vertex>(table->ids.size()));
    table->colors.push_back(c);
    table->ids.push_back(std::move(v.id));
  }
  table_ = std::move(table);

  std::vector<Arc> resolved;
  resolved.reserve(arcs.size());
  for (const auto& [from, to] : arcs) {
    resolved.push_back({vertex(from), vertex(to)});
  }
  assign_arcs(resolved);
}

ColoredDigraph::ColoredDigraph(std::shared_ptr<const VertexTable> table,
                               std::span<const Arc> arcs)
    : table_(std::move(table)) {
  assign_arcs(arcs);
}

void ColoredDigraph::assign_arcs(std::span<const Arc> arcs) {
  const std::size_t n = table_ ? table_->ids.size() : 0;
  words_ = (n + 63) / 64;
  bits_.assign(n * words_, 0);
  out_.assign(n, {});
  in_.assign(n, {});
  num_arcs_ = 0;
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw Error(ErrorCode::UnknownVertex, "arc endpoint index out of range");
    }
    if (a.from == a.to) {
      throw Error(ErrorCode::SelfLoop, "self-loop at '" + table_->ids[a.from] + "'");
    }
    auto& word = bits_[a.from * words_ + (a.to >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (a.to & 63);
    if (word & mask) continue;
    word |= mask;
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
    ++num_arcs_;
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::size_t ColoredDigraph::num_colors() const noexcept {
  return table_ ? table_->color_names.size() : 0;
}

const std::string& ColoredDigraph::id(Vertex v) const { return table_->ids.at(v); }

std::optional<Vertex> ColoredDigraph::find(std::string_view id) const {
  if (!table_) return std::nullopt;
  const auto& ids = table_->ids;
  auto it = std::lower_bound(ids.begin(), ids.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids.begin());
}

Vertex ColoredDigraph::vertex(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(id) + "'");
}

Color ColoredDigraph::color(Vertex v) const { return table_->colors.at(v); }

const std::string& ColoredDigraph::color_name(Color c) const {
  return table_->color_names.at(c);
}

std::optional<Color> ColoredDigraph::find_color(std::string_view name) const {
  if (!table_) return std::nullopt;
  const auto& names = table_->color_names;
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<Color>(it - names.begin());
}

std::span<const Vertex> ColoredDigraph::vertices_of_color(Color c) const {
  return table_->by_color.at(c);
}

std::vector<Arc> ColoredDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(num_arcs_);
  for (Vertex v = 0; v < out_.size(); ++v) {
    for (Vertex w : out_[v]) result.push_back({v, w});
  }
  return result;
}

ColoredDigraph ColoredDigraph::with_arcs(std::span<const Arc> arcs) const {
  return ColoredDigraph(table_, arcs);
}

ColoredDigraph ColoredDigraph::induced(std::span<const Vertex> keep) const {
  std::vector<VertexSpec> specs;
  specs.reserve(keep.size());
  for (Vertex v : keep) specs.push_back({id(v), color_name(color(v))});
  std::vector<ArcSpec> arcs;
  for (Vertex v : keep) {
    for (Vertex w : keep) {
      if (v != w && has_arc(v, w)) arcs.emplace_back(id(v), id(w));
    }
  }
  return ColoredDigraph(std::move(specs), arcs);
}

bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.size() != b.size() || a.num_arcs_ != b.num_arcs_) return false;
  if (a.table_ != b.table_) {
    for (Vertex v = 0; v < a.size(); ++v) {
      if (a.id(v) != b.id(v)) return false;
      if (a.color_name(a.color(v)) != b.color_name(b.color(v))) return false;
    }
  }
  return a.bits_ == b.bits_;
}

ColoringReport validate_coloring(const ColoredDigraph& g) {
  ColoringReport report;
  const std::size_t colors = g.num_colors();
  std::vector<char> seen(colors, 0);
  for (Vertex x = 0; x < g.size(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex y : g.out(x)) {
      if (g.color(y) == g.color(x)) {
        report.improper_arcs.push_back({x, y});
      } else {
        seen[g.color(y)] = 1;
      }
    }
    for (Color s = 0; s < colors; ++s) {
      if (s != g.color(x) && !seen[s]) report.witnesses.push_back({x, s});
    }
  }
  report.proper = report.improper_arcs.empty();
  report.sink_free = report.proper && report.witnesses.empty();
  return report;
}

bool is_properly_colored(const ColoredDigraph& g) {
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y : g.out(x)) {
      if (g.color(x) == g.color(y)) return false;
    }
  }
  return true;
}

bool is_sf_colored(const ColoredDigraph& g) {
  if (!is_properly_colored(g)) return false;
  const std::size_t colors = g.num_colors();
  std::vector<char> seen(colors, 0);
  for (Vertex x = 0; x < g.size(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t distinct = 0;
    for (Vertex y : g.out(x)) {
      if (!seen[g.color(y)]) {
        seen[g.color(y)] = 1;
        ++distinct;
      }
    }
    if (distinct + 1 != colors) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> thinness_classes(const ColoredDigraph& g) {
  // out/in lists are sorted, so equal neighborhoods compare equal as vectors.
  std::map<std::pair<std::vector<Vertex>, std::vector<Vertex>>, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto out = g.out(v);
    auto in = g.in(v);
    auto key = std::make_pair(std::vector<Vertex>(out.begin(), out.end()),
                              std::vector<Vertex>(in.begin(), in.end()));
    auto [it, inserted] = index.try_emplace(std::move(key), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::vector<std::vector<Vertex>> connected_components(const ColoredDigraph& g) {
  std::vector<int> label(g.size(), -1);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      components.back().push_back(v);
      for (auto nbrs : {g.out(v), g.in(v)}) {
        for (Vertex w : nbrs) {
          if (label[w] < 0) {
            label[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(components.back().begin(), components.back().end());
  }
  return components;
}

std::string_view to_string(EditMode mode) {
  switch (mode) {
    case EditMode::Deletion: return "deletion";
    case EditMode::Completion: return "completion";
    case EditMode::Editing: return "editing";
  }
  return "editing";
}

std::optional<EditMode> parse_edit_mode(std::string_view text) {
  if (text == "deletion" || text == "delete") return EditMode::Deletion;
  if (text == "completion" || text == "complete") return EditMode::Completion;
  if (text == "editing" || text == "edit") return EditMode::Editing;
  return std::nullopt;
}

ColoredDigraph apply_edit(const ColoredDigraph& g, const EditSet& edits) {
  for (const Arc& a : edits.pairs) {
    if (a.from >= g.size() || a.to >= g.size()) {
      throw Error(ErrorCode::UnknownVertex, "edit pair references a missing vertex");
    }
    if (a.from == a.to) {
      throw Error(ErrorCode::SelfLoop, "edit pair is a loop at '" + g.id(a.from) + "'");
    }
    const bool present = g.has_arc(a.from, a.to);
    if (edits.mode == EditMode::Deletion && !present) {
      throw Error(ErrorCode::ModeViolation,
                  "deletion of non-arc (" + g.id(a.from) + "," + g.id(a.to) + ")");
    }
    if (edits.mode == EditMode::Completion && present) {
      throw Error(ErrorCode::ModeViolation,
                  "completion with existing arc (" + g.id(a.from) + "," + g.id(a.to) + ")");
    }
  }
  if (edits.pairs.empty()) return g;

  std::vector<Arc> arcs;
  arcs.reserve(g.num_arcs() + edits.size());
  for (const Arc& a : g.arcs()) {
    if (!edits.pairs.contains(a)) arcs.push_back(a);
  }
  for (const Arc& a : edits.pairs) {
    if (!g.has_arc(a.from, a.to)) arcs.push_back(a);
  }
  return g.with_arcs(arcs);
}

std::vector<Arc> cross_color_pairs(const ColoredDigraph& g) {
  std::vector<Arc> pairs;
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x != y && g.color(x) != g.color(y)) pairs.push_back({x, y});
    }
  }
  return pairs;
}

}  // namespace bmg
