// Copyright 2026 The graphbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphbench/serializers.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace {

// --- rendering ---------------------------------------------------------------

std::string render_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return "[]";
  std::string out = "[";
  for (std::size_t u = 0; u < n; ++u) {
    if (u > 0) out += " ";
    out += "[";
    for (std::size_t v = 0; v < n; ++v) {
      if (v > 0) out += ' ';
      out += g.has_edge(static_cast<Node>(u), static_cast<Node>(v)) ? '1' : '0';
    }
    out += "]";
    if (u + 1 == n) break;
    // The reference layout pads every row after the first with one space.
    out += u == 0 ? "\n" : " \n";
  }
  out += "]";
  return out;
}

std::string render_adjacency(const Graph& g, bool as_set) {
  std::string out = "{";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (u > 0) out += ", ";
    out += std::to_string(u) + ": ";
    auto nb = g.neighbors(static_cast<Node>(u));
    if (as_set && nb.empty()) {
      out += "set()";
      continue;
    }
    out += as_set ? "{" : "[";
    out += detail::join_ints(nb, ", ");
    out += as_set ? "}" : "]";
  }
  out += "}";
  return out;
}

std::string render_edge_list(const Graph& g) {
  return detail::join(g.edges(), "\n", [](const Edge& e) {
    return std::to_string(e.u) + " " + std::to_string(e.v);
  });
}

std::string render_edge_set(const Graph& g) {
  if (g.edge_count() == 0) return "set()";
  return "{" +
         detail::join(g.edges(), ", ",
                      [](const Edge& e) {
                        return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
                      }) +
         "}";
}

std::string render_gmol(const Graph& g) {
  std::string out = "graph [\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    const std::string id = std::to_string(u);
    out += "  node [\n    id " + id + "\n    label \"" + id + "\"\n  ]\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  edge [\n    source " + std::to_string(e.u) + "\n    target " + std::to_string(e.v) +
           "\n  ]\n";
  }
  out += "]";
  return out;
}

std::string render_gmal(const Graph& g, bool strict) {
  const std::string tag = strict ? "graphml" : "GMaL";
  std::string out = "<?xml version='1.0' encoding='utf-8'?>\n";
  out += "<" + tag + " xmlns=\"http://" + tag + ".graphdrawing.org/xmlns\" \n";
  out += "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" \n";
  out += "         xsi:schemaLocation=\"http://" + tag + ".graphdrawing.org/xmlns \n";
  out += "         http://" + tag + ".graphdrawing.org/xmlns/1.0/" + tag + ".xsd\">\n";
  out += "  <graph edgedefault=\"undirected\">\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    out += "    <node id=\"" + std::to_string(u) + "\" />\n";
  }
  for (const Edge& e : g.edges()) {
    out += "    <edge source=\"" + std::to_string(e.u) + "\" target=\"" + std::to_string(e.v) +
           "\" />\n";
  }
  out += "  </graph>\n</" + tag + ">";
  return out;
}

// --- parsing -----------------------------------------------------------------

[[noreturn]] void malformed(std::string_view what, std::size_t offset) {
  throw Error(ErrorCode::kMalformedInput,
              std::string(what) + " at offset " + std::to_string(offset));
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Skips horizontal whitespace only.
  void skip_blank() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) malformed(std::string("expected '") + c + "'", pos_);
  }

  long read_int() {
    skip_ws();
    long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) malformed("expected an integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Node read_node() {
    const std::size_t at_offset = pos_;
    long v = read_int();
    if (v < 0 || v > 1'000'000) malformed("node id out of range", at_offset);
    return static_cast<Node>(v);
  }

  std::string read_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) malformed("expected a key", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_quoted() {
    expect('"');
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) malformed("unterminated string", start);
    std::string s(text_.substr(start, pos_ - start));
    ++pos_;
    return s;
  }

  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct EdgeCollector {
  std::set<Edge> edges;
  std::size_t max_id_plus_one = 0;

  void add(Node u, Node v, std::size_t offset) {
    if (u == v) malformed("self-loop", offset);
    edges.insert(u < v ? Edge{u, v} : Edge{v, u});
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }

  Graph build(std::size_t n, std::size_t offset) const {
    if (max_id_plus_one > n) malformed("edge endpoint beyond node count", offset);
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
  }
};

Graph parse_matrix(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  std::vector<std::vector<int>> rows;
  while (!c.accept(']')) {
    c.expect('[');
    std::vector<int> row;
    while (!c.accept(']')) {
      const std::size_t at = c.offset();
      long v = c.read_int();
      if (v != 0 && v != 1) malformed("matrix entries must be 0 or 1", at);
      row.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(row));
  }
  if (!c.done()) malformed("trailing text", c.offset());
  const std::size_t n = rows.size();
  EdgeCollector edges;
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) malformed("matrix row " + std::to_string(u) + " has wrong length", 0);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (rows[u][v] != rows[v][u]) malformed("matrix is not symmetric", 0);
      if (rows[u][v] == 1) {
        if (u == v) malformed("self-loop on the diagonal", 0);
        if (u < v) edges.add(static_cast<Node>(u), static_cast<Node>(v), 0);
      }
    }
  }
  return edges.build(n, 0);
}

Graph parse_adjacency(std::string_view text, bool as_set) {
  Cursor c(text);
  c.expect('{');
  EdgeCollector edges;
  std::vector<Node> keys;
  std::set<std::pair<Node, Node>> arcs;
  bool first = true;
  while (!c.accept('}')) {
    if (!first) c.expect(',');
    first = false;
    const Node u = c.read_node();
    keys.push_back(u);
    c.expect(':');
    if (as_set && c.accept("set()")) continue;
    const char close = as_set ? '}' : ']';
    c.expect(as_set ? '{' : '[');
    bool first_nb = true;
    while (!c.accept(close)) {
      if (!first_nb) c.expect(',');
      first_nb = false;
      const std::size_t at = c.offset();
      const Node v = c.read_node();
      edges.add(u, v, at);
      arcs.emplace(u, v);
    }
  }
  if (!c.done()) malformed("trailing text", c.offset());
  for (const auto& [u, v] : arcs) {
    if (!arcs.count({v, u})) {
      malformed("neighbour lists are not symmetric (" + std::to_string(u) + " lists " + std::to_string(v) + ")", 0);
    }
  }
  std::vector<Node> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<Node>(i)) malformed("node keys must be 0..n-1 without gaps", 0);
  }
  return edges.build(keys.size(), c.offset());
}

Graph parse_edge_list(std::string_view text, std::optional<std::size_t> node_count) {
  EdgeCollector edges;
  std::size_t line_start = 0;
  for (const std::string& raw : detail::split(text, '\n')) {
    std::string_view line = detail::trim(raw);
    if (!line.empty()) {
      Cursor c(line);
      const Node u = c.read_node();
      const Node v = c.read_node();
      if (!c.done()) malformed("expected exactly two ids per line", line_start);
      const Edge e = u < v ? Edge{u, v} : Edge{v, u};
      if (edges.edges.count(e) != 0) malformed("duplicate edge", line_start);
      edges.add(u, v, line_start);
    }
    line_start += raw.size() + 1;
  }
  return edges.build(node_count.value_or(edges.max_id_plus_one), text.size());
}

Graph parse_edge_set(std::string_view text, std::optional<std::size_t> node_count) {
  Cursor c(text);
  EdgeCollector edges;
  if (!c.accept("set()")) {
    c.expect('{');
    bool first = true;
    while (!c.accept('}')) {
      if (!first) c.expect(',');
      first = false;
      const std::size_t at = c.offset();
      c.expect('(');
      const Node u = c.read_node();
      c.expect(',');
      const Node v = c.read_node();
      c.expect(')');
      edges.add(u, v, at);
    }
  }
  if (!c.done()) malformed("trailing text", c.offset());
  return edges.build(node_count.value_or(edges.max_id_plus_one), c.offset());
}

// Reads the body of a `key [ ... ]` block into integer fields.
std::vector<std::pair<std::string, long>> read_gmol_block(Cursor& c) {
  std::vector<std::pair<std::string, long>> fields;
  c.expect('[');
  while (!c.accept(']')) {
    if (c.done()) malformed("unterminated block", c.offset());
    std::string key = c.read_word();
    if (c.at('"')) {
      c.read_quoted();
    } else if (c.at('[')) {
      read_gmol_block(c);  // nested attribute block, ignored
    } else {
      fields.emplace_back(std::move(key), c.read_int());
    }
  }
  return fields;
}

Graph parse_gmol(std::string_view text) {
  Cursor c(text);
  if (!c.accept("graph")) malformed("expected 'graph'", c.offset());
  c.expect('[');
  std::vector<Node> ids;
  EdgeCollector edges;
  while (!c.accept(']')) {
    if (c.done()) malformed("unterminated graph block", c.offset());
    const std::size_t at = c.offset();
    const std::string key = c.read_word();
    if (key == "node") {
      std::optional<long> id;
      for (auto& [k, v] : read_gmol_block(c)) {
        if (k == "id") id = v;
      }
      if (!id || *id < 0) malformed("node without a valid id", at);
      ids.push_back(static_cast<Node>(*id));
    } else if (key == "edge") {
      std::optional<long> s, t;
      for (auto& [k, v] : read_gmol_block(c)) {
        if (k == "source") s = v;
        if (k == "target") t = v;
      }
      if (!s || !t || *s < 0 || *t < 0) malformed("edge without source/target", at);
      edges.add(static_cast<Node>(*s), static_cast<Node>(*t), at);
    } else if (c.at('[')) {
      read_gmol_block(c);
    } else if (c.at('"')) {
      c.read_quoted();
    } else {
      c.read_int();  // graph-level scalar such as `directed 0`
    }
  }
  if (!c.done()) malformed("trailing text", c.offset());
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<Node>(i)) malformed("node ids must be 0..n-1 without gaps", 0);
  }
  return edges.build(ids.size(), c.offset());
}

Graph parse_gmal(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedInput,
                "invalid XML at line " + std::to_string(e.line()) + ": " + e.message());
  }
  const pt::ptree* root = nullptr;
  for (const char* name : {"GMaL", "graphml"}) {
    if (auto child = tree.get_child_optional(name)) {
      root = &*child;
      break;
    }
  }
  if (root == nullptr) malformed("missing <GMaL> or <graphml> root", 0);
  auto graph = root->get_child_optional("graph");
  if (!graph) malformed("missing <graph> element", 0);

  std::vector<Node> ids;
  EdgeCollector edges;
  for (const auto& [name, child] : *graph) {
    try {
      if (name == "node") {
        ids.push_back(child.get<Node>("<xmlattr>.id"));
      } else if (name == "edge") {
        edges.add(child.get<Node>("<xmlattr>.source"), child.get<Node>("<xmlattr>.target"), 0);
      }
    } catch (const pt::ptree_error& e) {
      throw Error(ErrorCode::kMalformedInput, std::string("bad <") + name + "> element: " + e.what());
    }
  }
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<Node>(i)) malformed("node ids must be 0..n-1 without gaps", 0);
  }
  return edges.build(ids.size(), 0);
}

}  // namespace

std::string_view format_id(SerializationFormat fmt) {
  switch (fmt) {
    case SerializationFormat::kAdjacencyMatrix: return "adjacency-matrix";
    case SerializationFormat::kAdjacencyList: return "adjacency-list";
    case SerializationFormat::kAdjacencySet: return "adjacency-set";
    case SerializationFormat::kEdgeList: return "edge-list";
    case SerializationFormat::kEdgeSet: return "edge-set";
    case SerializationFormat::kGMoL: return "gmol";
    case SerializationFormat::kGMaL: return "gmal";
  }
  return "unknown";
}

std::string_view format_display_name(SerializationFormat fmt) {
  switch (fmt) {
    case SerializationFormat::kAdjacencyMatrix: return "Adjacency Matrix";
    case SerializationFormat::kAdjacencyList: return "Adjacency List";
    case SerializationFormat::kAdjacencySet: return "Adjacency Set";
    case SerializationFormat::kEdgeList: return "Edge List";
    case SerializationFormat::kEdgeSet: return "Edge Set";
    case SerializationFormat::kGMoL: return "GMoL";
    case SerializationFormat::kGMaL: return "GMaL";
  }
  return "unknown";
}

SerializationFormat parse_format(std::string_view name) {
  const std::string key = detail::normalize_key(name);
  for (SerializationFormat f : kAllFormats) {
    if (key == format_id(f) || key == detail::normalize_key(format_display_name(f))) return f;
  }
  if (key == "am") return SerializationFormat::kAdjacencyMatrix;
  if (key == "al") return SerializationFormat::kAdjacencyList;
  if (key == "as") return SerializationFormat::kAdjacencySet;
  if (key == "el") return SerializationFormat::kEdgeList;
  if (key == "es") return SerializationFormat::kEdgeSet;
  if (key == "gml") return SerializationFormat::kGMoL;
  if (key == "graphml") return SerializationFormat::kGMaL;
  throw Error(ErrorCode::kInvalidArgument, "unknown serialization format '" + std::string(name) + "'");
}

std::string serialize(const Graph& g, SerializationFormat fmt, const SerializeOptions& options) {
  switch (fmt) {
    case SerializationFormat::kAdjacencyMatrix: return render_matrix(g);
    case SerializationFormat::kAdjacencyList: return render_adjacency(g, false);
    case SerializationFormat::kAdjacencySet: return render_adjacency(g, true);
    case SerializationFormat::kEdgeList: return render_edge_list(g);
    case SerializationFormat::kEdgeSet: return render_edge_set(g);
    case SerializationFormat::kGMoL: return render_gmol(g);
    case SerializationFormat::kGMaL: return render_gmal(g, options.strict_graphml);
  }
  return {};
}

Graph parse(std::string_view text, SerializationFormat fmt, std::optional<std::size_t> node_count) {
  try {
    switch (fmt) {
      case SerializationFormat::kAdjacencyMatrix: return parse_matrix(text);
      case SerializationFormat::kAdjacencyList: return parse_adjacency(text, false);
      case SerializationFormat::kAdjacencySet: return parse_adjacency(text, true);
      case SerializationFormat::kEdgeList: return parse_edge_list(text, node_count);
      case SerializationFormat::kEdgeSet: return parse_edge_set(text, node_count);
      case SerializationFormat::kGMoL: return parse_gmol(text);
      case SerializationFormat::kGMaL: return parse_gmal(text);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedInput) throw;
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown serialization format");
}

}  // namespace graphbench
