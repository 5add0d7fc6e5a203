#include <algorithm>
#include <sstream>

#include "bmg/error.hpp"
#include "bmg/ilp.hpp"
#include "bmg/recognition.hpp"

namespace bmg {

std::string_view to_string(Formulation f) {
  return f == Formulation::TwoColor ? "two_color" : "general";
}

std::optional<Formulation> parse_formulation(std::string_view text) {
  if (text == "two_color" || text == "two-color" || text == "2") return Formulation::TwoColor;
  if (text == "general") return Formulation::General;
  return std::nullopt;
}

std::optional<std::size_t> IlpModel::find_variable(std::string_view name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

std::size_t IlpModel::count(RowFamily family) const {
  return static_cast<std::size_t>(std::count_if(
      constraints.begin(), constraints.end(), [&](const Constraint& c) { return c.family == family; }));
}

namespace {

class ModelWriter {
 public:
  ModelWriter(const ColoredDigraph& g, IlpModel& m) : g_(g), m_(m) {}

  std::size_t var(std::string name) {
    m_.variables.push_back(std::move(name));
    return m_.variables.size() - 1;
  }
  std::size_t eps(Vertex x, Vertex y) const { return *m_.eps_var(x, y); }
  void row(RowFamily family, std::vector<Term> terms, Sense sense, std::int64_t rhs) {
    m_.constraints.push_back({family, std::move(terms), sense, rhs});
  }
  const std::string& id(Vertex v) const { return g_.id(v); }

 private:
  const ColoredDigraph& g_;
  IlpModel& m_;
};

void add_base(const ColoredDigraph& g, IlpModel& m, ModelWriter& w) {
  const std::size_t n = g.size();
  m.eps_index.assign(n * n, std::nullopt);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (g.color(x) == g.color(y)) {
        m.fixed_zero.push_back({x, y});
        if (g.has_arc(x, y)) ++m.objective_constant;
        continue;
      }
      const std::size_t v = w.var("e_" + g.id(x) + "_" + g.id(y));
      m.eps_index[x * n + y] = v;
      if (g.has_arc(x, y)) {
        ++m.objective_constant;
        m.objective.push_back({v, -1});
      } else {
        m.objective.push_back({v, 1});
      }
    }
  }

  if (m.mode != EditMode::Editing) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y || g.color(x) == g.color(y)) continue;
        const std::int64_t e = g.has_arc(x, y) ? 1 : 0;
        if (m.mode == EditMode::Completion) {
          w.row(RowFamily::Completion, {{w.eps(x, y), 1}}, Sense::Ge, e);
        } else {
          w.row(RowFamily::Deletion, {{w.eps(x, y), 1}}, Sense::Le, e);
        }
      }
    }
  }

  for (Vertex x = 0; x < n; ++x) {
    for (Color s = 0; s < g.num_colors(); ++s) {
      if (s == g.color(x)) continue;
      std::vector<Term> terms;
      for (Vertex y : g.vertices_of_color(s)) terms.push_back({w.eps(x, y), 1});
      w.row(RowFamily::AllColors, std::move(terms), Sense::Ge, 1);
    }
  }
}

void add_two_color(const ColoredDigraph& g, ModelWriter& w) {
  const auto e = [&](Vertex a, Vertex b) { return w.eps(a, b); };
  for (Color a = 0; a < 2; ++a) {
    const auto xs = g.vertices_of_color(a);
    const auto ys = g.vertices_of_color(1 - a);
    for (Vertex x1 : xs) {
      for (Vertex x2 : xs) {
        if (x1 == x2) continue;
        for (Vertex y1 : ys) {
          for (Vertex y2 : ys) {
            if (y1 == y2) continue;
            w.row(RowFamily::F1,
                  {{e(x1, y1), 1}, {e(y1, x2), 1}, {e(y2, x2), 1}, {e(x1, y2), -1}, {e(y2, x1), -1}},
                  Sense::Le, 2);
            w.row(RowFamily::F2, {{e(x1, y1), 1}, {e(y1, x2), 1}, {e(x2, y2), 1}, {e(x1, y2), -1}},
                  Sense::Le, 2);
          }
        }
      }
    }
  }
  for (Color a = 0; a < 2; ++a) {
    const auto xs = g.vertices_of_color(a);
    const auto ys = g.vertices_of_color(1 - a);
    for (Vertex x1 : xs) {
      for (Vertex x2 : xs) {
        if (x1 == x2) continue;
        for (Vertex y1 : ys) {
          for (Vertex y2 : ys) {
            for (Vertex y3 : ys) {
              if (y1 == y2 || y1 == y3 || y2 == y3) continue;
              w.row(RowFamily::F3,
                    {{e(x1, y1), 1}, {e(x1, y3), 1}, {e(x2, y2), 1}, {e(x2, y3), 1},
                     {e(x1, y2), -1}, {e(x2, y1), -1}},
                    Sense::Le, 3);
            }
          }
        }
      }
    }
  }
}

void add_general(const ColoredDigraph& g, IlpModel& m, ModelWriter& w) {
  const std::size_t n = g.size();
  if (n < 3) return;

  // Ordered (x, y, y') with color(x) != color(y) = color(y'); each such
  // tuple names a distinct triple xy|y'.
  m.t_offset = m.variables.size();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (y == x || g.color(y) == g.color(x)) continue;
      for (Vertex y2 : g.vertices_of_color(g.color(y))) {
        if (y2 == y) continue;
        m.triples.push_back({std::min(x, y), std::max(x, y), y2});
      }
    }
  }
  for (const auto& [a, b, c] : m.triples) w.var("t_" + w.id(a) + "_" + w.id(b) + "_" + w.id(c));
  for (std::size_t i = 0; i < m.triples.size(); ++i) {
    const auto& [a, b, c] = m.triples[i];
    const Vertex x = g.color(a) == g.color(c) ? b : a;
    const Vertex y = x == a ? b : a;
    const std::size_t t = m.t_offset + i;
    w.row(RowFamily::Informative, {{w.eps(x, y), 1}, {w.eps(x, c), -1}, {t, -1}}, Sense::Le, 0);
    w.row(RowFamily::Forbidden, {{w.eps(x, y), 1}, {w.eps(x, c), 1}, {t, 1}}, Sense::Le, 2);
  }

  const std::size_t cols = n - 2;
  m.cluster_columns = cols;
  m.big_m_offset = m.variables.size();
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t p = 1; p <= cols; ++p) w.var("M_" + w.id(x) + "_" + std::to_string(p));
  }
  const auto big_m = [&](Vertex x, std::size_t p) { return m.big_m_offset + x * cols + (p - 1); };

  m.small_m_offset = m.variables.size();
  for (const auto& [a, b, c] : m.triples) {
    for (std::size_t p = 1; p <= cols; ++p) {
      w.var("m_" + w.id(a) + "_" + w.id(b) + "_" + w.id(c) + "_" + std::to_string(p));
    }
  }
  for (std::size_t i = 0; i < m.triples.size(); ++i) {
    const auto& [a, b, c] = m.triples[i];
    for (std::size_t p = 1; p <= cols; ++p) {
      const std::size_t mv = m.small_m_offset + i * cols + (p - 1);
      std::vector<Term> terms{{mv, -3}, {big_m(a, p), 1}, {big_m(b, p), 1}, {big_m(c, p), -1}};
      w.row(RowFamily::ClusterLow, terms, Sense::Ge, -1);
      w.row(RowFamily::ClusterHigh, std::move(terms), Sense::Le, 1);
    }
  }
  for (std::size_t i = 0; i < m.triples.size(); ++i) {
    const std::size_t t = m.t_offset + i;
    std::vector<Term> low{{t, 1}};
    std::vector<Term> high;
    for (std::size_t p = 1; p <= cols; ++p) {
      const std::size_t mv = m.small_m_offset + i * cols + (p - 1);
      low.push_back({mv, -1});
      high.push_back({mv, 1});
    }
    high.push_back({t, -static_cast<std::int64_t>(cols)});
    w.row(RowFamily::CoverLow, std::move(low), Sense::Le, 0);
    w.row(RowFamily::CoverHigh, std::move(high), Sense::Le, 0);
  }

  m.gamete_offset = m.variables.size();
  for (std::size_t p = 1; p <= cols; ++p) {
    for (std::size_t q = p + 1; q <= cols; ++q) {
      const std::string stem = "C_" + std::to_string(p) + "_" + std::to_string(q) + "_";
      const std::size_t c01 = w.var(stem + "01");
      const std::size_t c10 = w.var(stem + "10");
      const std::size_t c11 = w.var(stem + "11");
      for (Vertex a = 0; a < n; ++a) {
        w.row(RowFamily::Gamete, {{c01, 1}, {big_m(a, p), 1}, {big_m(a, q), -1}}, Sense::Ge, 0);
        w.row(RowFamily::Gamete, {{c10, 1}, {big_m(a, p), -1}, {big_m(a, q), 1}}, Sense::Ge, 0);
        w.row(RowFamily::Gamete, {{c11, 1}, {big_m(a, p), -1}, {big_m(a, q), -1}}, Sense::Ge, -1);
      }
      w.row(RowFamily::GameteSum, {{c01, 1}, {c10, 1}, {c11, 1}}, Sense::Le, 2);
    }
  }
}

}  // namespace

IlpModel build_model(const ColoredDigraph& g, EditMode mode, Formulation formulation) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (formulation == Formulation::TwoColor && g.num_colors() != 2) {
    throw Error(ErrorCode::WrongColorCount,
                "two_color formulation needs 2 colors, found " + std::to_string(g.num_colors()));
  }
  if (formulation == Formulation::General && g.num_colors() < 2) {
    throw Error(ErrorCode::WrongColorCount, "general formulation needs at least 2 colors");
  }
  IlpModel m;
  m.mode = mode;
  m.formulation = formulation;
  m.num_vertices = g.size();
  ModelWriter w(g, m);
  add_base(g, m, w);
  if (formulation == Formulation::TwoColor) {
    add_two_color(g, w);
  } else {
    add_general(g, m, w);
  }
  return m;
}

namespace {

/// Appends terms, starting a continuation line once a line gets long.
class LineWriter {
 public:
  explicit LineWriter(std::ostringstream& out, std::size_t start) : out_(out), width_(start) {}

  void token(const std::string& text) {
    if (width_ + text.size() + 1 > 200) {
      out_ << "\n  ";
      width_ = 2;
    } else {
      out_ << ' ';
      ++width_;
    }
    out_ << text;
    width_ += text.size();
  }

 private:
  std::ostringstream& out_;
  std::size_t width_;
};

void write_terms(LineWriter& lw, const IlpModel& m, const std::vector<Term>& terms) {
  bool first = true;
  for (const Term& t : terms) {
    std::string text;
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (t.coef < 0) {
      text = "- ";
    } else if (!first) {
      text = "+ ";
    }
    if (mag != 1) text += std::to_string(mag) + " ";
    text += m.variables[t.var];
    lw.token(text);
    first = false;
  }
}

}  // namespace

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "Minimize\n obj:";
  {
    LineWriter lw(out, 5);
    write_terms(lw, model, model.objective);
    const std::int64_t c = model.objective_constant;
    if (model.objective.empty()) {
      lw.token(std::to_string(c));
    } else if (c != 0) {
      lw.token((c < 0 ? "- " : "+ ") + std::to_string(c < 0 ? -c : c));
    }
  }
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < model.constraints.size(); ++i) {
    const Constraint& row = model.constraints[i];
    const std::string label = " c" + std::to_string(i + 1) + ":";
    out << label;
    LineWriter lw(out, label.size());
    write_terms(lw, model, row.terms);
    const char* sense = row.sense == Sense::Le ? "<=" : row.sense == Sense::Ge ? ">=" : "=";
    lw.token(std::string(sense) + " " + std::to_string(row.rhs));
    out << '\n';
  }
  out << "Binary\n";
  for (std::size_t i = 0; i < model.variables.size(); i += 8) {
    for (std::size_t j = i; j < std::min(i + 8, model.variables.size()); ++j) {
      out << ' ' << model.variables[j];
    }
    out << '\n';
  }
  out << "End\n";
  return out.str();
}

Evaluation evaluate(const IlpModel& model, const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != model.variables.size()) {
    throw Error(ErrorCode::BadParameters, "assignment size does not match the model");
  }
  Evaluation ev;
  ev.objective = model.objective_constant;
  for (const Term& t : model.objective) ev.objective += t.coef * assignment[t.var];
  for (std::size_t i = 0; i < model.constraints.size(); ++i) {
    const Constraint& row = model.constraints[i];
    std::int64_t lhs = 0;
    for (const Term& t : row.terms) lhs += t.coef * assignment[t.var];
    const bool ok = row.sense == Sense::Le   ? lhs <= row.rhs
                    : row.sense == Sense::Ge ? lhs >= row.rhs
                                             : lhs == row.rhs;
    if (!ok) ev.violated.push_back(i);
  }
  return ev;
}

std::vector<std::uint8_t> assignment_from_edit(const ColoredDigraph& g, const IlpModel& model,
                                               const EditSet& edits) {
  const ColoredDigraph edited = apply_edit(g, edits);
  std::vector<std::uint8_t> a(model.variables.size(), 0);
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x == y) continue;
      if (auto v = model.eps_var(x, y)) a[*v] = edited.has_arc(x, y) ? 1 : 0;
    }
  }
  if (model.formulation != Formulation::General || model.cluster_columns == 0) return a;

  auto result = recognize_bmg(edited);
  if (!result.is_bmg) throw Error(ErrorCode::NotABmg, "edited graph is not a best match graph");
  const PhyloTree& tree = *result.explaining_tree;
  const std::size_t cols = model.cluster_columns;

  std::size_t p = 0;
  for (const Cluster& c : clusters(tree).clusters) {
    if (!c.nontrivial) continue;
    for (const auto& id : c.leaves) a[model.big_m_offset + g.vertex(id) * cols + p] = 1;
    ++p;
  }
  const auto big_m = [&](Vertex x, std::size_t col) { return a[model.big_m_offset + x * cols + col]; };

  for (std::size_t i = 0; i < model.triples.size(); ++i) {
    const auto& [x, y, z] = model.triples[i];
    a[model.t_offset + i] = displays(tree, Triple::make(g.id(x), g.id(y), g.id(z))) ? 1 : 0;
    for (std::size_t col = 0; col < cols; ++col) {
      a[model.small_m_offset + i * cols + col] = big_m(x, col) && big_m(y, col) && !big_m(z, col);
    }
  }
  std::size_t k = model.gamete_offset;
  for (std::size_t pc = 0; pc < cols; ++pc) {
    for (std::size_t qc = pc + 1; qc < cols; ++qc) {
      for (Vertex v = 0; v < g.size(); ++v) {
        const bool in_p = big_m(v, pc);
        const bool in_q = big_m(v, qc);
        if (!in_p && in_q) a[k] = 1;
        if (in_p && !in_q) a[k + 1] = 1;
        if (in_p && in_q) a[k + 2] = 1;
      }
      k += 3;
    }
  }
  return a;
}

EditSet decode_edit_set(const ColoredDigraph& g, const IlpModel& model,
                        const std::vector<std::uint8_t>& assignment) {
  EditSet f;
  f.mode = model.mode;
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x == y) continue;
      auto v = model.eps_var(x, y);
      if (v && (assignment.at(*v) != 0) != g.has_arc(x, y)) f.pairs.insert({x, y});
    }
  }
  return f;
}

}  // namespace bmg
