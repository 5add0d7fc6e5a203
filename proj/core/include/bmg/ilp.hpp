#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/colored_digraph.hpp"

namespace bmg {

enum class Formulation { TwoColor, General };

std::string_view to_string(Formulation f);
std::optional<Formulation> parse_formulation(std::string_view text);

/// Which group of rows a constraint belongs to.
enum class RowFamily {
  Completion,     // e_xy >= E_xy
  Deletion,       // e_xy <= E_xy
  AllColors,      // sum over color s of e_xy >= 1
  F1,
  F2,
  F3,
  Informative,    // e_xy - e_xy' - t <= 0
  Forbidden,      // e_xy + e_xy' + t <= 2
  ClusterLow,     // -3m + Ma + Mb - Mc >= -1
  ClusterHigh,    // -3m + Ma + Mb - Mc <= 1
  CoverLow,       // t - sum m <= 0
  CoverHigh,      // sum m - (n-2) t <= 0
  Gamete,         // C_pq_gl >= gamete of a
  GameteSum,      // C01 + C10 + C11 <= 2
};

enum class Sense { Le, Ge, Eq };

struct Term {
  std::size_t var = 0;
  std::int64_t coef = 0;
};

struct Constraint {
  RowFamily family = RowFamily::AllColors;
  std::vector<Term> terms;
  Sense sense = Sense::Le;
  std::int64_t rhs = 0;
};

/// 0-1 program. Same-colored pairs get no epsilon variable; they are reported
/// in `fixed_zero` instead.
struct IlpModel {
  EditMode mode = EditMode::Editing;
  Formulation formulation = Formulation::TwoColor;
  std::size_t num_vertices = 0;
  std::vector<std::string> variables;
  std::vector<Term> objective;
  std::int64_t objective_constant = 0;
  std::vector<Constraint> constraints;
  /// Ordered pairs x != y; eps_var(x,y) is empty for same-colored pairs.
  std::vector<std::optional<std::size_t>> eps_index;
  std::vector<Arc> fixed_zero;

  // General formulation layout. Variables are stored in blocks: epsilon,
  // t (one per entry of `triples`), M (vertex-major), m (triple-major), C
  // (three per column pair p < q, gametes 01, 10, 11).
  std::size_t cluster_columns = 0;
  std::vector<std::array<Vertex, 3>> triples;
  std::size_t t_offset = 0;
  std::size_t big_m_offset = 0;
  std::size_t small_m_offset = 0;
  std::size_t gamete_offset = 0;

  std::size_t num_epsilon_pairs() const {
    return num_vertices == 0 ? 0 : num_vertices * (num_vertices - 1);
  }
  std::optional<std::size_t> eps_var(Vertex x, Vertex y) const {
    return eps_index[static_cast<std::size_t>(x) * num_vertices + y];
  }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::size_t count(RowFamily family) const;
};

/// Throws WrongColorCount (two_color needs exactly 2 colors, general at
/// least 2) or EmptyGraph.
IlpModel build_model(const ColoredDigraph& g, EditMode mode, Formulation formulation);

/// CPLEX-LP text; identical models give identical bytes.
std::string export_lp(const IlpModel& model);

struct Evaluation {
  std::int64_t objective = 0;
  std::vector<std::size_t> violated;
  bool feasible() const noexcept { return violated.empty(); }
};

Evaluation evaluate(const IlpModel& model, const std::vector<std::uint8_t>& assignment);

/// Assignment induced by the edited graph G xor F: epsilon from the arcs;
/// for the general formulation the cluster columns, triple and gamete
/// variables come from the tree explaining the edited graph. Throws NotABmg
/// for the general formulation when the edited graph is not a BMG.
std::vector<std::uint8_t> assignment_from_edit(const ColoredDigraph& g, const IlpModel& model,
                                               const EditSet& edits);

/// Edit set encoded by the epsilon variables of an assignment.
EditSet decode_edit_set(const ColoredDigraph& g, const IlpModel& model,
                        const std::vector<std::uint8_t>& assignment);

struct BinarySolution {
  std::int64_t objective = 0;
  std::vector<std::uint8_t> assignment;
};

/// Exhaustive branch and bound with bound propagation; meant for models with
/// a few dozen variables. Returns nothing if the program is infeasible.
std::optional<BinarySolution> solve_binary_program(const IlpModel& model);

struct SolveResult {
  std::size_t optimal_cost = 0;
  EditSet edit_set;
  bool proof = false;
};

/// Minimum edit set making g a BMG. Throws NotProperlyColored, Infeasible or
/// BudgetExceeded.
SolveResult solve_exact(const ColoredDigraph& g, EditMode mode,
                        std::optional<std::size_t> budget = std::nullopt);

bool verify_edit(const ColoredDigraph& g, const EditSet& edits);

}  // namespace bmg
