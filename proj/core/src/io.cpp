#include "bmg/io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bmg/error.hpp"

namespace bmg {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

/// Calls `visit(line_number, words)` for every non-blank, non-comment line.
void for_each_record(std::string_view text, bool skip_first,
                     const std::function<void(std::size_t, const std::vector<std::string>&)>& visit) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (skip_first && line_no == 1) continue;
    auto words = split_words(line);
    if (words.empty() || words.front()[0] == '#') continue;
    visit(line_no, words);
  }
}

}  // namespace

ColoredDigraph parse_graph(std::string_view text) {
  std::string_view first = text.substr(0, text.find('\n'));
  if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  if (first != "#bmg v1") throw Error(ErrorCode::ParseError, "expected header '#bmg v1'", 1);

  std::vector<VertexSpec> specs;
  std::map<std::string, std::size_t> declared;
  std::vector<std::pair<ArcSpec, std::size_t>> arcs;
  std::set<ArcSpec> seen_arcs;
  for_each_record(text, true, [&](std::size_t line, const std::vector<std::string>& w) {
    if (w[0] == "V") {
      if (w.size() != 3) throw Error(ErrorCode::ParseError, "vertex record needs 'V <id> <color>'", line);
      if (!declared.emplace(w[1], line).second) {
        throw Error(ErrorCode::DuplicateRecord, "vertex '" + w[1] + "' declared twice", line);
      }
      specs.push_back({w[1], w[2]});
    } else if (w[0] == "A") {
      if (w.size() != 3) throw Error(ErrorCode::ParseError, "arc record needs 'A <src> <dst>'", line);
      if (w[1] == w[2]) throw Error(ErrorCode::ParseError, "self-loop at '" + w[1] + "'", line);
      if (!seen_arcs.insert({w[1], w[2]}).second) {
        throw Error(ErrorCode::DuplicateRecord, "arc (" + w[1] + "," + w[2] + ") listed twice", line);
      }
      arcs.push_back({{w[1], w[2]}, line});
    } else {
      throw Error(ErrorCode::ParseError, "unknown record type '" + w[0] + "'", line);
    }
  });

  std::vector<ArcSpec> plain;
  plain.reserve(arcs.size());
  for (const auto& [arc, line] : arcs) {
    for (const auto* end : {&arc.first, &arc.second}) {
      if (!declared.contains(*end)) {
        throw Error(ErrorCode::UnknownVertexInArc, "arc uses undeclared vertex '" + *end + "'", line);
      }
    }
    plain.push_back(arc);
  }
  return ColoredDigraph(std::move(specs), plain);
}

std::string serialize_graph(const ColoredDigraph& g) {
  std::string out = "#bmg v1\n";
  for (Vertex v = 0; v < g.size(); ++v) out += "V " + g.id(v) + " " + g.color_name(g.color(v)) + "\n";
  for (const Arc& a : g.arcs()) out += "A " + g.id(a.from) + " " + g.id(a.to) + "\n";
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PhyloTree parse() {
    skip_space();
    if (peek() == '(') {
      expect('(');
      children(builder_.root());
      expect(')');
    } else {
      leaf(builder_.root());
    }
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    return std::move(builder_).build();
  }

 private:
  void children(NodeId parent) {
    node(parent);
    skip_space();
    while (peek() == ',') {
      ++pos_;
      node(parent);
      skip_space();
    }
  }

  void node(NodeId parent) {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      NodeId inner = builder_.add_inner(parent);
      children(inner);
      expect(')');
    } else {
      leaf(parent);
    }
  }

  void leaf(NodeId parent) {
    std::string id = token();
    skip_space();
    if (peek() != '|') fail("leaf '" + id + "' has no '|<color>' suffix");
    ++pos_;
    std::string color = token();
    builder_.add_leaf(parent, std::move(id), std::move(color));
  }

  std::string token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_special(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_special(char c) {
    return c == '(' || c == ')' || c == ',' || c == ';' || c == '|' ||
           std::isspace(static_cast<unsigned char>(c));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos_), '\n'));
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_), line);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
};

void write_node(const PhyloTree& t, NodeId v, std::string& out) {
  if (t.is_leaf(v)) {
    out += t.leaf_id(v) + "|" + t.leaf_color(v);
    return;
  }
  out += '(';
  bool first = true;
  for (NodeId c : t.children(v)) {
    if (!first) out += ',';
    write_node(t, c, out);
    first = false;
  }
  out += ')';
}

}  // namespace

PhyloTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string serialize_tree(const PhyloTree& tree) {
  std::string out;
  if (tree.empty()) return out;
  if (tree.is_leaf(tree.root())) {
    out = "(";
    write_node(tree, tree.root(), out);
    out += ")";
  } else {
    write_node(tree, tree.root(), out);
  }
  return out + ";";
}

X3cInstance parse_x3c(std::string_view text) {
  X3cInstance inst;
  std::size_t t = 0;
  std::size_t m = 0;
  bool header = false;
  std::set<std::string> elements;
  for_each_record(text, false, [&](std::size_t line, const std::vector<std::string>& w) {
    if (!header) {
      if (w.size() != 2) throw Error(ErrorCode::ParseError, "header must be 't m'", line);
      try {
        t = std::stoul(w[0]);
        m = std::stoul(w[1]);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "header must hold two integers", line);
      }
      header = true;
      return;
    }
    if (w.size() != 3) throw Error(ErrorCode::ParseError, "subset line needs three elements", line);
    inst.subsets.push_back({w[0], w[1], w[2]});
    elements.insert(w.begin(), w.end());
  });
  if (!header) throw Error(ErrorCode::ParseError, "missing 't m' header", 1);
  if (inst.subsets.size() != m) {
    throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) + " subsets, found " +
                                           std::to_string(inst.subsets.size()));
  }
  if (elements.size() != 3 * t) {
    throw Error(ErrorCode::ParseError, "subsets mention " + std::to_string(elements.size()) +
                                           " elements, expected 3t = " + std::to_string(3 * t));
  }
  inst.universe.assign(elements.begin(), elements.end());
  return inst;
}

BipartiteGraph parse_bipartite(std::string_view text) {
  BipartiteGraph u;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> pending;
  for_each_record(text, false, [&](std::size_t line, const std::vector<std::string>& w) {
    if (w[0] == "P") {
      u.p.insert(u.p.end(), w.begin() + 1, w.end());
    } else if (w[0] == "Q") {
      u.q.insert(u.q.end(), w.begin() + 1, w.end());
    } else if (w[0] == "E") {
      if (w.size() != 3) throw Error(ErrorCode::ParseError, "edge line needs 'E <p> <q>'", line);
      pending.push_back({line, {w[1], w[2]}});
    } else {
      throw Error(ErrorCode::ParseError, "unknown record type '" + w[0] + "'", line);
    }
  });
  auto index = [](const std::vector<std::string>& part, const std::string& name, std::size_t line) {
    auto it = std::find(part.begin(), part.end(), name);
    if (it == part.end()) throw Error(ErrorCode::ParseError, "unknown vertex '" + name + "'", line);
    return static_cast<std::size_t>(it - part.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [line, e] : pending) {
    auto edge = std::make_pair(index(u.p, e.first, line), index(u.q, e.second, line));
    if (!seen.insert(edge).second) throw Error(ErrorCode::ParseError, "edge listed twice", line);
    u.edges.push_back(edge);
  }
  return u;
}

}  // namespace bmg
