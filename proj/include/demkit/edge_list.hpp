#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// A graph together with the external label of each vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  /// `# key=value` header comments, in file order.
  std::vector<std::pair<std::string, std::string>> header;

  const std::string& label(Vertex v) const { return labels.at(static_cast<std::size_t>(v)); }
  /// Vertex carrying `label`; throws BadParameter if unknown.
  Vertex vertex(const std::string& label) const;
};

/// Labels 0..n-1 for an unlabeled graph.
LabeledGraph with_index_labels(Graph g);

/// Parses the `n m` + `u v` edge-list format. Lines starting with `#` are
/// comments. When every label is an integer in [0, n) labels are used as ids;
/// otherwise labels are numbered in order of first appearance. Throws Parse.
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph parse_edge_list(const std::string& text);

/// Canonical form: header comments, `n m`, then edges sorted by vertex id.
void write_edge_list(std::ostream& out, const LabeledGraph& g);
std::string format_edge_list(const LabeledGraph& g);

}  // namespace demkit
