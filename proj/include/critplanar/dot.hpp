#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "critplanar/constructions.hpp"
#include "critplanar/graph.hpp"

namespace critplanar {

/// Undirected DOT text. Nodes are named v<id>. With composition metadata the
/// apex is filled and labelled z, its spokes are dashed, and other new edges bold.
inline std::string export_dot(const SimpleGraph& g, const ComposedGraph* meta = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v;
    if (meta && meta->apex && static_cast<std::size_t>(*meta->apex) == v)
      out << " [label=\"z\", style=filled, fillcolor=white, penwidth=2]";
    else
      out << " [label=\"" << v << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  v" << e.u << " -- v" << e.v;
    if (meta && std::binary_search(meta->added_edges.begin(), meta->added_edges.end(), e)) {
      const bool spoke = meta->apex && (e.u == *meta->apex || e.v == *meta->apex);
      out << (spoke ? " [style=dashed]" : " [style=bold, color=red]");
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace critplanar
