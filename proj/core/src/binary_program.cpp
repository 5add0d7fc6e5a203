#include <algorithm>
#include <limits>

#include "bmg/ilp.hpp"

namespace bmg {

namespace {

struct Row {
  std::vector<Term> terms;
  std::int64_t rhs;  // sum(terms) <= rhs
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const IlpModel& m) : model_(m), value_(m.variables.size(), -1) {
    for (const Constraint& c : m.constraints) {
      if (c.sense != Sense::Ge) add_row(c.terms, c.rhs, 1);
      if (c.sense != Sense::Le) add_row(c.terms, c.rhs, -1);
    }
    rows_of_.resize(value_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const Term& t : rows_[r].terms) rows_of_[t.var].push_back(r);
    }
    cost_.assign(value_.size(), 0);
    for (const Term& t : m.objective) cost_[t.var] += t.coef;

    // epsilon first, then cluster membership, then everything derived.
    const std::size_t n = value_.size();
    auto push_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t v = lo; v < std::min(hi, n); ++v) order_.push_back(v);
    };
    if (m.formulation == Formulation::General && m.cluster_columns > 0) {
      push_range(0, m.t_offset);
      push_range(m.big_m_offset, m.small_m_offset);
      push_range(m.t_offset, m.big_m_offset);
      push_range(m.gamete_offset, n);
      push_range(m.small_m_offset, m.gamete_offset);
    } else {
      push_range(0, n);
    }
  }

  std::optional<BinarySolution> run() {
    for (std::size_t r = 0; r < rows_.size(); ++r) queue_.push_back(r);
    if (propagate()) search(0);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  void add_row(const std::vector<Term>& terms, std::int64_t rhs, int sign) {
    Row row{{}, sign * rhs};
    for (const Term& t : terms) row.terms.push_back({t.var, sign * t.coef});
    rows_.push_back(std::move(row));
  }

  std::int64_t min_activity(const Row& row) const {
    std::int64_t act = 0;
    for (const Term& t : row.terms) {
      if (value_[t.var] >= 0) {
        act += t.coef * value_[t.var];
      } else if (t.coef < 0) {
        act += t.coef;
      }
    }
    return act;
  }

  void assign(std::size_t v, int val) {
    value_[v] = static_cast<std::int8_t>(val);
    trail_.push_back(v);
    for (std::size_t r : rows_of_[v]) queue_.push_back(r);
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Row& row = rows_[queue_.back()];
      queue_.pop_back();
      const std::int64_t act = min_activity(row);
      if (act > row.rhs) {
        queue_.clear();
        return false;
      }
      for (const Term& t : row.terms) {
        if (value_[t.var] >= 0) continue;
        const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
        if (act + mag > row.rhs) assign(t.var, t.coef > 0 ? 0 : 1);
      }
    }
    return true;
  }

  std::int64_t lower_bound() const {
    std::int64_t lb = model_.objective_constant;
    for (std::size_t v = 0; v < value_.size(); ++v) {
      if (value_[v] >= 0) {
        lb += cost_[v] * value_[v];
      } else if (cost_[v] < 0) {
        lb += cost_[v];
      }
    }
    return lb;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void search(std::size_t pos) {
    if (found_ && lower_bound() >= best_.objective) return;
    while (pos < order_.size() && value_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      best_.objective = lower_bound();
      best_.assignment.assign(value_.begin(), value_.end());
      found_ = true;
      return;
    }
    const std::size_t v = order_[pos];
    const int first = cost_[v] < 0 ? 1 : 0;
    for (int val : {first, 1 - first}) {
      const std::size_t mark = trail_.size();
      assign(v, val);
      if (propagate()) search(pos + 1);
      undo(mark);
    }
  }

  const IlpModel& model_;
  std::vector<std::int8_t> value_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> rows_of_;
  std::vector<std::int64_t> cost_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> queue_;
  std::vector<std::size_t> trail_;
  BinarySolution best_;
  bool found_ = false;
};

}  // namespace

std::optional<BinarySolution> solve_binary_program(const IlpModel& model) {
  BranchAndBound bb(model);
  return bb.run();
}

}  // namespace bmg
