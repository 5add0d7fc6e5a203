#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <cstdint>
#include <numeric>
#include <set>

#include "bmg/recognition.hpp"
#include "pattern_match.hpp"

namespace bmg {

namespace {

/// Small 2-colored digraph on at most 5 vertices.
struct Small {
  std::size_t n = 0;
  std::array<std::uint8_t, 5> side{};
  std::uint32_t adj = 0;  // bit i*5+j: arc i -> j

  bool arc(std::size_t i, std::size_t j) const { return (adj >> (i * 5 + j)) & 1U; }
};

/// Minimum encoding over all vertex permutations and both color labelings.
std::uint64_t canonical(const Small& g) {
  std::array<std::size_t, 5> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    for (std::uint8_t flip = 0; flip < 2; ++flip) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < g.n; ++i) code = (code << 1) | (g.side[perm[i]] ^ flip);
      for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) {
          if (i != j) code = (code << 1) | (g.arc(perm[i], perm[j]) ? 1U : 0U);
        }
      }
      best = std::min(best, code);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return best;
}

/// Every instance of a template: required arcs plus any subset of the
/// cross-color pairs that are neither required nor forbidden.
std::vector<Small> instances(const detail::Template& t) {
  Small base;
  base.n = t.roles;
  base.side = t.side;
  for (auto [a, b] : t.arcs) base.adj |= 1U << (a * 5 + b);
  std::vector<std::pair<int, int>> optional;
  for (std::size_t i = 0; i < t.roles; ++i) {
    for (std::size_t j = 0; j < t.roles; ++j) {
      if (i == j || t.side[i] == t.side[j]) continue;
      std::pair<int, int> p{static_cast<int>(i), static_cast<int>(j)};
      if (std::find(t.arcs.begin(), t.arcs.end(), p) != t.arcs.end()) continue;
      if (std::find(t.non_arcs.begin(), t.non_arcs.end(), p) != t.non_arcs.end()) continue;
      optional.push_back(p);
    }
  }
  std::vector<Small> out;
  for (std::uint32_t mask = 0; mask < (1U << optional.size()); ++mask) {
    Small g = base;
    for (std::size_t k = 0; k < optional.size(); ++k) {
      if (mask & (1U << k)) g.adj |= 1U << (optional[k].first * 5 + optional[k].second);
    }
    out.push_back(g);
  }
  return out;
}

Small induced(const Small& g, const std::vector<std::size_t>& keep) {
  Small h;
  h.n = keep.size();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    h.side[i] = g.side[keep[i]];
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && g.arc(keep[i], keep[j])) h.adj |= 1U << (i * 5 + j);
    }
  }
  return h;
}

ColoredDigraph to_graph(const Small& g) {
  std::vector<VertexSpec> specs;
  for (std::size_t i = 0; i < g.n; ++i) {
    specs.push_back({"v" + std::to_string(i), g.side[i] ? "B" : "A"});
  }
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (i != j && g.arc(i, j)) arcs.emplace_back(specs[i].id, specs[j].id);
    }
  }
  return ColoredDigraph(std::move(specs), arcs);
}

}  // namespace

ForbiddenCatalog enumerate_forbidden_classes() {
  ForbiddenCatalog cat;
  const auto f1 = instances(detail::template_for(WitnessKind::F1));
  const auto f2 = instances(detail::template_for(WitnessKind::F2));
  const auto f3 = instances(detail::template_for(WitnessKind::F3));
  cat.f1_graphs = f1.size();
  cat.f2_graphs = f2.size();
  cat.f3_graphs = f3.size();

  std::map<std::uint64_t, Small> f1_classes, f2_classes, f3_classes;
  for (const auto& g : f1) f1_classes.emplace(canonical(g), g);
  for (const auto& g : f2) f2_classes.emplace(canonical(g), g);
  for (const auto& g : f3) f3_classes.emplace(canonical(g), g);
  cat.f1_iso_classes = f1_classes.size();
  cat.f2_iso_classes = f2_classes.size();
  cat.f3_iso_classes = f3_classes.size();

  std::map<std::uint64_t, Small> small_classes = f1_classes;
  small_classes.insert(f2_classes.begin(), f2_classes.end());
  cat.f1_f2_iso_classes = small_classes.size();
  cat.overlap = f1_classes.size() + f2_classes.size() - small_classes.size();

  for (const auto& [code, g] : small_classes) cat.representatives.push_back(to_graph(g));
  for (const auto& [code, g] : f3_classes) {
    // Two-plus-two subsets: both x vertices and two of the three y vertices.
    bool redundant = false;
    for (std::size_t drop = 2; drop < 5 && !redundant; ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < 5; ++i) {
        if (i != drop) keep.push_back(i);
      }
      redundant = small_classes.contains(canonical(induced(g, keep)));
    }
    if (!redundant) {
      ++cat.f3_without_f1_f2;
      cat.representatives.push_back(to_graph(g));
    }
  }
  cat.nonredundant_total = cat.f1_f2_iso_classes + cat.f3_without_f1_f2;
  return cat;
}

}  // namespace bmg
