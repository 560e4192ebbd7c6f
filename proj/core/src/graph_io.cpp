#include "shs/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace shs {

namespace {

struct LabelInterner {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;

  NodeId intern(const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  }
};

LoadedGraph finish(LabelInterner&& interner, std::vector<Edge>&& edges) {
  LoadedGraph out;
  out.graph = UndirectedGraph(interner.labels.size(), edges);
  out.labels = std::move(interner.labels);
  out.label_ids = std::move(interner.ids);
  return out;
}

}  // namespace

NodeId LoadedGraph::id_of(const std::string& label) const {
  auto it = label_ids.find(label);
  if (it == label_ids.end())
    throw std::invalid_argument("unknown node label '" + label + "'");
  return it->second;
}

LoadedGraph load_edge_list(std::istream& in) {
  LabelInterner interner;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v) || (fields >> extra))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected exactly two labels");
    const NodeId a = interner.intern(u);
    const NodeId b = interner.intern(v);
    if (a == b)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": self-loop on '" + u + "'");
    edges.emplace_back(a, b);
  }
  return finish(std::move(interner), std::move(edges));
}

namespace {

// Minimal GML tokenizer: words, numbers, quoted strings, brackets.
std::vector<std::string> gml_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  char c;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
  };
  while (in.get(c)) {
    if (c == '"') {
      flush();
      std::string quoted;
      while (in.get(c) && c != '"') quoted.push_back(c);
      tokens.push_back(quoted);
    } else if (c == '[' || c == ']') {
      flush();
      tokens.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return tokens;
}

}  // namespace

LoadedGraph load_gml(std::istream& in) {
  const auto tokens = gml_tokens(in);
  LabelInterner interner;
  std::vector<Edge> edges;

  // Skip a bracketed value (possibly nested) starting at `i` pointing past a
  // key; returns the index after the value.
  auto skip_value = [&](std::size_t i) -> std::size_t {
    if (i >= tokens.size()) return i;
    if (tokens[i] != "[") return i + 1;
    int depth = 0;
    for (; i < tokens.size(); ++i) {
      if (tokens[i] == "[") ++depth;
      if (tokens[i] == "]" && --depth == 0) return i + 1;
    }
    throw std::invalid_argument("gml: unbalanced brackets");
  };

  std::size_t i = 0;
  while (i < tokens.size() && tokens[i] != "graph") ++i;
  if (i == tokens.size()) throw std::invalid_argument("gml: no 'graph [' block");
  if (++i >= tokens.size() || tokens[i] != "[")
    throw std::invalid_argument("gml: expected '[' after 'graph'");
  ++i;

  int depth = 1;
  while (i < tokens.size() && depth > 0) {
    const std::string& tok = tokens[i];
    if (tok == "]") {
      --depth;
      ++i;
    } else if (tok == "node" || tok == "edge") {
      const bool is_node = tok == "node";
      if (i + 1 >= tokens.size() || tokens[i + 1] != "[")
        throw std::invalid_argument("gml: expected '[' after '" + tok + "'");
      std::size_t j = i + 2;
      std::string id, source, target;
      while (j < tokens.size() && tokens[j] != "]") {
        const std::string key = tokens[j++];
        if (j >= tokens.size()) throw std::invalid_argument("gml: key without value");
        if (key == "id") id = tokens[j++];
        else if (key == "source") source = tokens[j++];
        else if (key == "target") target = tokens[j++];
        else j = skip_value(j);
      }
      if (j >= tokens.size()) throw std::invalid_argument("gml: unterminated block");
      if (is_node) {
        if (id.empty()) throw std::invalid_argument("gml: node without id");
        interner.intern(id);
      } else {
        if (source.empty() || target.empty())
          throw std::invalid_argument("gml: edge without source/target");
        const NodeId a = interner.intern(source);
        const NodeId b = interner.intern(target);
        if (a == b) throw std::invalid_argument("gml: self-loop on id " + source);
        edges.emplace_back(a, b);
      }
      i = j + 1;
    } else {
      ++i;
      i = skip_value(i);
    }
  }
  return finish(std::move(interner), std::move(edges));
}

LoadedGraph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return format == GraphFormat::kGml ? load_gml(in) : load_edge_list(in);
}

LoadedGraph load_graph_file(const std::string& path) {
  const bool gml = path.size() >= 4 && path.compare(path.size() - 4, 4, ".gml") == 0;
  return load_graph_file(path, gml ? GraphFormat::kGml : GraphFormat::kEdgeList);
}

}  // namespace shs
