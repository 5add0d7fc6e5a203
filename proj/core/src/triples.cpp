#include "bmg/triples.hpp"

#include <algorithm>
#include <array>

#include "bmg/error.hpp"
#include "partition_build.hpp"

namespace bmg {

TriplePair extract_triples(const ColoredDigraph& g) {
  TriplePair out;
  for (Vertex v = 0; v < g.size(); ++v) out.leaf_universe.push_back(g.id(v));
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y : g.out(x)) {
      if (g.color(y) == g.color(x)) continue;
      for (Vertex y2 : g.vertices_of_color(g.color(y))) {
        if (y2 == y) continue;
        auto t = Triple::make(g.id(x), g.id(y), g.id(y2));
        if (g.has_arc(x, y2)) {
          out.forbidden.insert(std::move(t));
        } else {
          out.informative.insert(std::move(t));
        }
      }
    }
  }
  return out;
}

namespace {

using IndexTriple = std::array<std::uint32_t, 3>;

std::vector<VertexSpec> sorted_leaves(std::span<const VertexSpec> leaves) {
  std::vector<VertexSpec> sorted(leaves.begin(), leaves.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].id == sorted[i - 1].id) {
      throw Error(ErrorCode::DuplicateLeaf, "leaf '" + sorted[i].id + "' listed twice");
    }
  }
  return sorted;
}

std::vector<IndexTriple> index_triples(const std::set<Triple>& triples,
                                       const std::vector<VertexSpec>& leaves) {
  auto index = [&](const std::string& id) {
    auto it = std::lower_bound(leaves.begin(), leaves.end(), id,
                               [](const VertexSpec& a, const std::string& b) { return a.id < b; });
    if (it == leaves.end() || it->id != id) {
      throw Error(ErrorCode::UnknownLeaf, "triple mentions unknown leaf '" + id + "'");
    }
    return static_cast<std::uint32_t>(it - leaves.begin());
  };
  std::vector<IndexTriple> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back({index(t.a), index(t.b), index(t.c)});
  return out;
}

std::optional<PhyloTree> run(const std::set<Triple>& r, const std::set<Triple>* f,
                             std::span<const VertexSpec> leaves) {
  auto sorted = sorted_leaves(leaves);
  auto rs = index_triples(r, sorted);
  std::vector<IndexTriple> fs;
  if (f) fs = index_triples(*f, sorted);

  auto rule = [&](const detail::Level& level, detail::UnionFind& uf) {
    auto inside = [&](const IndexTriple& t) {
      return level.contains(t[0]) && level.contains(t[1]) && level.contains(t[2]);
    };
    for (const auto& t : rs) {
      if (inside(t)) uf.unite(t[0], t[1]);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& t : fs) {
        if (!inside(t)) continue;
        if (uf.find(t[0]) == uf.find(t[1]) && uf.find(t[2]) != uf.find(t[0])) {
          uf.unite(t[0], t[2]);
          changed = true;
        }
      }
    }
  };
  return detail::partition_build(sorted, rule);
}

std::vector<VertexSpec> uncolored(std::span<const std::string> leaves) {
  std::vector<VertexSpec> specs;
  specs.reserve(leaves.size());
  for (const auto& id : leaves) specs.push_back({id, "-"});
  return specs;
}

}  // namespace

std::optional<PhyloTree> build_tree(const std::set<Triple>& r, std::span<const VertexSpec> leaves) {
  return run(r, nullptr, leaves);
}

std::optional<PhyloTree> mtt(const std::set<Triple>& r, const std::set<Triple>& f,
                             std::span<const VertexSpec> leaves) {
  return run(r, &f, leaves);
}

std::optional<PhyloTree> build_tree(const std::set<Triple>& r, std::span<const std::string> leaves) {
  return build_tree(r, uncolored(leaves));
}

std::optional<PhyloTree> mtt(const std::set<Triple>& r, const std::set<Triple>& f,
                             std::span<const std::string> leaves) {
  return mtt(r, f, uncolored(leaves));
}

}  // namespace bmg
