#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

enum class GraphFormat { kEdgeList, kGml };

/// A graph plus the mapping between dense internal ids and the labels the
/// source file used. All user-facing output goes through `labels`.
struct LoadedGraph {
  UndirectedGraph graph;
  std::vector<std::string> labels;                   // NodeId -> original label
  std::unordered_map<std::string, NodeId> label_ids;  // original label -> NodeId

  NodeId id_of(const std::string& label) const;
};

/// Edge list: one `u v` pair per line, whitespace separated; labels may be
/// arbitrary strings; `#` starts a comment; blank lines ignored. Duplicate
/// edges collapse; self-loops are rejected.
LoadedGraph load_edge_list(std::istream& in);

/// GML subset: `graph [ node [ id N ] ... edge [ source A target B ] ... ]`.
/// Other keys (label, directed, ...) are skipped.
LoadedGraph load_gml(std::istream& in);

/// Loads from a file, inferring the format from the extension (.gml) unless
/// one is forced.
LoadedGraph load_graph_file(const std::string& path);
LoadedGraph load_graph_file(const std::string& path, GraphFormat format);

}  // namespace shs
