#include <algorithm>
#include <set>

#include "bmg/error.hpp"
#include "bmg/generators.hpp"

namespace bmg {

namespace {

void check_instance(const X3cInstance& inst) {
  if (inst.universe.empty() || inst.universe.size() % 3 != 0) {
    throw Error(ErrorCode::BadInstance, "universe size must be a positive multiple of 3");
  }
  std::set<std::string> elements(inst.universe.begin(), inst.universe.end());
  if (elements.size() != inst.universe.size()) {
    throw Error(ErrorCode::BadInstance, "universe lists an element twice");
  }
  if (inst.m() <= inst.t()) {
    throw Error(ErrorCode::BadInstance, "need more subsets than t (m > t)");
  }
  for (const auto& c : inst.subsets) {
    std::set<std::string> members(c.begin(), c.end());
    if (members.size() != 3) throw Error(ErrorCode::BadInstance, "subset elements must be distinct");
    for (const auto& s : c) {
      if (!elements.contains(s)) throw Error(ErrorCode::BadInstance, "unknown element '" + s + "'");
    }
  }
}

std::size_t element_index(const X3cInstance& inst, const std::string& s) {
  return static_cast<std::size_t>(std::find(inst.universe.begin(), inst.universe.end(), s) -
                                  inst.universe.begin());
}

std::string s_id(std::size_t i, char side) { return "s" + std::to_string(i + 1) + "_" + side; }

}  // namespace

GadgetOutput x3c_gadget(const X3cInstance& inst, std::optional<GadgetScale> scale) {
  check_instance(inst);
  const std::size_t t = inst.t();
  const std::size_t m = inst.m();
  const std::size_t r = 18 * t * t;
  const std::size_t k = 6 * r * (m - t) + r - 18 * t;
  const std::size_t q = 3 * k;

  GadgetOutput out;
  out.instance = inst;
  std::size_t x_half = r;
  std::size_t y_half = q;
  if (scale) {
    if (scale->x_half == 0 || scale->y_half == 0) {
      throw Error(ErrorCode::BadInstance, "scaled bi-cliques need at least one vertex per color");
    }
    x_half = scale->x_half;
    y_half = scale->y_half;
    out.faithful = false;
    out.r = x_half;
    out.q_const = y_half;
    out.k = 6 * x_half * (m - t) + r - 18 * t;
  } else {
    out.r = r;
    out.q_const = q;
    out.k = k;
  }

  std::vector<VertexSpec> specs;
  std::vector<ArcSpec> arcs;
  auto add = [&](std::string id, const char* color, const std::string& role) {
    out.role_map[id] = role;
    specs.push_back({std::move(id), color});
  };
  for (std::size_t i = 0; i < 3 * t; ++i) {
    add(s_id(i, 'b'), "black", "S");
    add(s_id(i, 'w'), "white", "S");
  }
  for (std::size_t i = 0; i < 3 * t; ++i) {
    for (std::size_t j = 0; j < 3 * t; ++j) {
      arcs.emplace_back(s_id(i, 'b'), s_id(j, 'w'));
      arcs.emplace_back(s_id(j, 'w'), s_id(i, 'b'));
    }
  }

  auto clique_ids = [](const std::string& name, char side, std::size_t count) {
    std::vector<std::string> ids;
    for (std::size_t j = 1; j <= count; ++j) ids.push_back(name + "_" + side + std::to_string(j));
    return ids;
  };
  auto link = [&](const std::vector<std::string>& from, const std::vector<std::string>& to) {
    for (const auto& a : from) {
      for (const auto& b : to) arcs.emplace_back(a, b);
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    const std::string xi = "X" + std::to_string(i + 1);
    const std::string yi = "Y" + std::to_string(i + 1);
    const auto xb = clique_ids(xi, 'b', x_half);
    const auto xw = clique_ids(xi, 'w', x_half);
    const auto yb = clique_ids(yi, 'b', y_half);
    const auto yw = clique_ids(yi, 'w', y_half);
    for (const auto& id : xb) add(id, "black", xi);
    for (const auto& id : xw) add(id, "white", xi);
    for (const auto& id : yb) add(id, "black", yi);
    for (const auto& id : yw) add(id, "white", yi);
    link(xb, xw);
    link(xw, xb);
    link(yb, yw);
    link(yw, yb);
    link(xb, yw);
    link(xw, yb);
    for (const auto& s : inst.subsets[i]) {
      const std::size_t e = element_index(inst, s);
      link(xw, {s_id(e, 'b')});
      link(xb, {s_id(e, 'w')});
    }
  }
  out.graph = ColoredDigraph(std::move(specs), arcs);
  return out;
}

EditSet cover_edit_set(const GadgetOutput& gadget, const std::vector<std::size_t>& cover) {
  if (!gadget.instance) throw Error(ErrorCode::BadInstance, "gadget was not built from an X3C instance");
  const X3cInstance& inst = *gadget.instance;
  std::vector<int> owner(inst.universe.size(), -1);
  std::set<std::size_t> chosen;
  for (std::size_t i : cover) {
    if (i >= inst.m() || !chosen.insert(i).second) {
      throw Error(ErrorCode::NotAnExactCover, "cover index out of range or repeated");
    }
    for (const auto& s : inst.subsets[i]) {
      const std::size_t e = element_index(inst, s);
      if (owner[e] >= 0) throw Error(ErrorCode::NotAnExactCover, "element '" + s + "' covered twice");
      owner[e] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw Error(ErrorCode::NotAnExactCover, "some element is not covered");
  }

  const ColoredDigraph& g = gadget.graph;
  EditSet f;
  f.mode = EditMode::Deletion;
  for (Vertex x = 0; x < g.size(); ++x) {
    const std::string& role = gadget.role_map.at(g.id(x));
    if (role[0] != 'X' || chosen.contains(std::stoul(role.substr(1)) - 1)) continue;
    for (Vertex y : g.out(x)) {
      if (gadget.role_map.at(g.id(y)) == "S") f.pairs.insert({x, y});
    }
  }
  for (std::size_t a = 0; a < owner.size(); ++a) {
    for (std::size_t b = 0; b < owner.size(); ++b) {
      if (owner[a] == owner[b]) continue;
      f.pairs.insert({g.vertex(s_id(a, 'b')), g.vertex(s_id(b, 'w'))});
      f.pairs.insert({g.vertex(s_id(a, 'w')), g.vertex(s_id(b, 'b'))});
    }
  }
  return f;
}

GadgetOutput cgc_gadget(const BipartiteGraph& u) {
  if (u.p.empty() || u.q.empty()) throw Error(ErrorCode::EmptyPart, "both parts must be nonempty");
  GadgetOutput out;
  std::vector<VertexSpec> specs;
  std::vector<ArcSpec> arcs;
  auto add = [&](std::string id, const char* color, const std::string& role) {
    out.role_map[id] = role;
    specs.push_back({std::move(id), color});
  };
  auto p_id = [](std::size_t i) { return "p" + std::to_string(i + 1); };
  auto q_id = [](std::size_t i) { return "q" + std::to_string(i + 1); };
  auto r_id = [](std::size_t i) { return "r" + std::to_string(i + 1); };
  add("b", "black", "b");
  add("w", "white", "w");
  arcs.emplace_back("w", "b");
  arcs.emplace_back("b", "w");
  for (std::size_t i = 0; i < u.p.size(); ++i) {
    add(p_id(i), "black", "P");
    arcs.emplace_back(p_id(i), "w");
  }
  for (std::size_t i = 0; i < u.q.size(); ++i) {
    add(q_id(i), "white", "Q");
    add(r_id(i), "black", "R");
    arcs.emplace_back(q_id(i), r_id(i));
    arcs.emplace_back(r_id(i), q_id(i));
  }
  for (auto [i, j] : u.edges) {
    if (i >= u.p.size() || j >= u.q.size()) throw Error(ErrorCode::BadInstance, "edge index out of range");
    arcs.emplace_back(p_id(i), q_id(j));
  }
  out.graph = ColoredDigraph(std::move(specs), arcs);
  return out;
}

bool is_chain_graph(const BipartiteGraph& u) {
  std::set<std::pair<std::size_t, std::size_t>> edges(u.edges.begin(), u.edges.end());
  for (auto [p1, q1] : edges) {
    for (auto [p2, q2] : edges) {
      if (p1 == p2 || q1 == q2) continue;
      if (!edges.contains({p1, q2}) && !edges.contains({p2, q1})) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> min_chain_completion(
    const BipartiteGraph& u, std::size_t max_added) {
  std::set<std::pair<std::size_t, std::size_t>> present(u.edges.begin(), u.edges.end());
  std::vector<std::pair<std::size_t, std::size_t>> absent;
  for (std::size_t i = 0; i < u.p.size(); ++i) {
    for (std::size_t j = 0; j < u.q.size(); ++j) {
      if (!present.contains({i, j})) absent.emplace_back(i, j);
    }
  }
  for (std::size_t size = 0; size <= std::min(max_added, absent.size()); ++size) {
    // Walk all index combinations of the given size in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      BipartiteGraph v = u;
      for (std::size_t i : idx) v.edges.push_back(absent[i]);
      if (is_chain_graph(v)) {
        std::vector<std::pair<std::size_t, std::size_t>> added;
        for (std::size_t i : idx) added.push_back(absent[i]);
        return added;
      }
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == absent.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace bmg
