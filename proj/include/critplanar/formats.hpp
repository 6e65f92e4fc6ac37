#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "critplanar/graph.hpp"
#include "critplanar/graph6.hpp"

namespace critplanar {

enum class GraphFormat { Graph6, EdgeList, Dot };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "g6") return GraphFormat::Graph6;
  if (name == "el") return GraphFormat::EdgeList;
  if (name == "dot") return GraphFormat::Dot;
  throw Error(ErrorCode::DecodeError, "unknown format '" + std::string(name) + "' (expected g6, el or dot)");
}

/// Format implied by a file extension, if any.
inline std::optional<GraphFormat> format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::Graph6;
  if (ext == ".el") return GraphFormat::EdgeList;
  if (ext == ".dot") return GraphFormat::Dot;
  return std::nullopt;
}

/// "n m" on the first line, then one "u v" pair per line.
inline std::string encode_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline SimpleGraph decode_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::DecodeError, "edge list needs an 'n m' header");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::DecodeError, "edge list ends after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::DecodeError, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::DecodeError, "trailing data after " + std::to_string(m) + " edges");
  try {
    return SimpleGraph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::DecodeError, e.what());
  }
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

/// First graph of a .g6 file, or the graph of a .el file.
inline SimpleGraph read_graph_file(const std::filesystem::path& path) {
  const auto format = format_for_path(path);
  const std::string text = read_text_file(path);
  if (format == GraphFormat::EdgeList) return decode_edge_list(text);
  if (format == GraphFormat::Graph6) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return decode_graph6(line);
    }
    throw Error(ErrorCode::DecodeError, path.string() + " holds no graph");
  }
  throw Error(ErrorCode::DecodeError, "cannot read graphs from " + path.string() + " (expected .g6 or .el)");
}

}  // namespace critplanar
