#include <set>

#include "bmg/error.hpp"
#include "bmg/ilp.hpp"
#include "bmg/recognition.hpp"
#include "pattern_match.hpp"

namespace bmg {

namespace {

class EditSearch {
 public:
  EditSearch(const ColoredDigraph& g, EditMode mode) : g_(g), mode_(mode) {}

  std::optional<EditSet> run(std::size_t limit) {
    seen_.clear();
    EditSet f;
    f.mode = mode_;
    if (dfs(f, limit)) return f;
    return std::nullopt;
  }

 private:
  bool allowed(const EditSet& f, Arc p) const {
    if (f.pairs.contains(p)) return false;
    if (mode_ == EditMode::Deletion) return g_.has_arc(p.from, p.to);
    if (mode_ == EditMode::Completion) return !g_.has_arc(p.from, p.to);
    return true;
  }

  // Pairs one of which any BMG reachable from `cur` by further edits must
  // flip: the missing pairs of a sink, or the defining pairs of an induced
  // F1/F2/F3 graph on two colors. Without such a witness, every allowed
  // cross pair.
  std::vector<Arc> candidates(const ColoredDigraph& cur, const EditSet& f) const {
    std::vector<Arc> out;
    const auto report = validate_coloring(cur);
    if (!report.witnesses.empty()) {
      const auto [x, s] = report.witnesses.front();
      for (Vertex y : cur.vertices_of_color(s)) {
        if (allowed(f, {x, y})) out.push_back({x, y});
      }
      return out;
    }
    for (Color a = 0; a < cur.num_colors(); ++a) {
      for (Color b = a + 1; b < cur.num_colors(); ++b) {
        auto w = find_forbidden_witness(cur, a, b);
        if (!w) continue;
        const auto& t = detail::template_for(w->kind);
        for (const auto& pairs : {t.arcs, t.non_arcs}) {
          for (auto [i, j] : pairs) {
            const Arc p{w->vertices[i], w->vertices[j]};
            if (allowed(f, p)) out.push_back(p);
          }
        }
        return out;
      }
    }
    for (const Arc& p : cross_color_pairs(cur)) {
      if (allowed(f, p)) out.push_back(p);
    }
    return out;
  }

  bool dfs(EditSet& f, std::size_t remaining) {
    const ColoredDigraph cur = apply_edit(g_, f);
    if (recognize_bmg(cur).is_bmg) return true;
    if (remaining == 0) return false;
    if (!seen_.insert(f.pairs).second) return false;
    for (const Arc& p : candidates(cur, f)) {
      f.pairs.insert(p);
      if (dfs(f, remaining - 1)) return true;
      f.pairs.erase(p);
    }
    return false;
  }

  const ColoredDigraph& g_;
  EditMode mode_;
  std::set<std::set<Arc>> seen_;
};

}  // namespace

SolveResult solve_exact(const ColoredDigraph& g, EditMode mode, std::optional<std::size_t> budget) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!is_properly_colored(g)) {
    throw Error(ErrorCode::NotProperlyColored, "edit problems need a proper coloring");
  }
  SolveResult result;
  result.edit_set.mode = mode;
  if (recognize_bmg(g).is_bmg) {
    result.proof = true;
    return result;
  }
  if (mode == EditMode::Deletion && !validate_coloring(g).sink_free) {
    throw Error(ErrorCode::Infeasible, "deletion cannot remove a sink");
  }

  // Completing every cross pair always yields a BMG; deletion is bounded by
  // the arc count.
  const std::size_t missing = cross_color_pairs(g).size() - g.num_arcs();
  const std::size_t upper = mode == EditMode::Deletion ? g.num_arcs() : missing;

  EditSearch search(g, mode);
  for (std::size_t k = 1; k <= upper; ++k) {
    if (budget && k > *budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "no edit set of size <= " + std::to_string(*budget) + " exists");
    }
    if (auto f = search.run(k)) {
      result.optimal_cost = f->size();
      result.edit_set = std::move(*f);
      result.proof = verify_edit(g, result.edit_set);
      return result;
    }
  }
  throw Error(ErrorCode::Infeasible, "no " + std::string(to_string(mode)) + " set yields a BMG");
}

bool verify_edit(const ColoredDigraph& g, const EditSet& edits) {
  return recognize_bmg(apply_edit(g, edits)).is_bmg;
}

}  // namespace bmg
