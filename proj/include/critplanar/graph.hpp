#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critplanar/error.hpp"

namespace critplanar {

using VertexId = std::int32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Records where each vertex of an operand landed in a derived graph.
struct VertexMap {
  std::vector<VertexId> image;

  VertexId operator()(VertexId v) const { return image.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return image.size(); }

  static VertexMap identity(std::size_t n) {
    VertexMap m;
    m.image.resize(n);
    std::iota(m.image.begin(), m.image.end(), VertexId{0});
    return m;
  }

  /// this followed by next.
  VertexMap then(const VertexMap& next) const {
    VertexMap m;
    m.image.reserve(image.size());
    for (VertexId v : image) m.image.push_back(next(v));
    return m;
  }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Immutable undirected simple graph over the dense vertex ids 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::size_t n, std::vector<Edge> edges = {}) : n_(n), adjacency_(n) {
    for (auto& e : edges) {
      if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
        throw Error(ErrorCode::UnknownVertex, "edge " + to_string(e) + " outside 0.." + std::to_string(n));
      e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw Error(ErrorCode::EdgeExists, "parallel edge " + to_string(*dup));
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
      adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  /// Builds a graph from possibly repeated, possibly reversed pairs; duplicates collapse.
  static SimpleGraph from_pairs_collapsing(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph(n, std::move(edges));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool contains(VertexId v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }

  bool has_edge(VertexId a, VertexId b) const {
    if (!contains(a) || !contains(b) || a == b) return false;
    auto nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

inline void require_vertex(const SimpleGraph& g, VertexId v) {
  if (!g.contains(v))
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.vertex_count()));
}

inline SimpleGraph remove_edge(const SimpleGraph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e)) throw Error(ErrorCode::EdgeAbsent, "edge " + to_string(e) + " not present");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

inline SimpleGraph add_edge(const SimpleGraph& g, Edge e) {
  if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
  require_vertex(g, e.u);
  require_vertex(g, e.v);
  e = make_edge(e.u, e.v);
  if (g.has_edge(e)) throw Error(ErrorCode::EdgeExists, "edge " + to_string(e) + " already present");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

/// Merges every listed pair at once. Each merged class takes the slot of its
/// smallest member, then ids are compacted to 0..n'-1 preserving order.
/// Parallel edges created by the merge collapse.
inline std::pair<SimpleGraph, VertexMap> identify_pairs(const SimpleGraph& g,
                                                        std::span<const std::pair<VertexId, VertexId>> pairs) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (auto [a, b] : pairs) {
    require_vertex(g, a);
    require_vertex(g, b);
    if (a == b) throw Error(ErrorCode::SameVertex, "cannot identify vertex " + std::to_string(a) + " with itself");
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) continue;
    // smaller id is root, so the class representative is its minimum
    if (ra < rb) parent[static_cast<std::size_t>(rb)] = ra;
    else parent[static_cast<std::size_t>(ra)] = rb;
  }
  for (const auto& e : g.edges())
    if (find(e.u) == find(e.v))
      throw Error(ErrorCode::SelfLoopWouldForm,
                  "identification would turn edge " + to_string(e) + " into a self-loop");

  VertexMap map;
  map.image.assign(n, -1);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    VertexId root = find(static_cast<VertexId>(v));
    if (root == static_cast<VertexId>(v)) map.image[v] = next++;
  }
  for (std::size_t v = 0; v < n; ++v) map.image[v] = map.image[static_cast<std::size_t>(find(static_cast<VertexId>(v)))];

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(make_edge(map(e.u), map(e.v)));
  return {SimpleGraph::from_pairs_collapsing(static_cast<std::size_t>(next), std::move(edges)), std::move(map)};
}

inline std::pair<SimpleGraph, VertexMap> identify_vertices(const SimpleGraph& g, VertexId a, VertexId b) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) throw Error(ErrorCode::SameVertex, "cannot identify vertex " + std::to_string(a) + " with itself");
  if (g.has_edge(a, b))
    throw Error(ErrorCode::SelfLoopWouldForm,
                "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
  const std::pair<VertexId, VertexId> pair{a, b};
  return identify_pairs(g, std::span(&pair, 1));
}

inline std::pair<SimpleGraph, std::vector<VertexMap>> disjoint_union(std::span<const SimpleGraph> graphs) {
  if (graphs.empty()) throw Error(ErrorCode::EmptyOperandList, "disjoint union of zero graphs");
  std::vector<VertexMap> maps;
  std::vector<Edge> edges;
  VertexId offset = 0;
  for (const auto& g : graphs) {
    VertexMap m;
    m.image.resize(g.vertex_count());
    std::iota(m.image.begin(), m.image.end(), offset);
    for (const auto& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += static_cast<VertexId>(g.vertex_count());
    maps.push_back(std::move(m));
  }
  return {SimpleGraph(static_cast<std::size_t>(offset), std::move(edges)), std::move(maps)};
}

inline std::pair<SimpleGraph, VertexId> add_vertex_with_edges(const SimpleGraph& g, std::span<const VertexId> nbrs) {
  std::vector<VertexId> sorted(nbrs.begin(), nbrs.end());
  std::sort(sorted.begin(), sorted.end());
  for (VertexId v : sorted) require_vertex(g, v);
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw Error(ErrorCode::DuplicateNeighbor, "neighbor " + std::to_string(*dup) + " listed twice");
  const auto z = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (VertexId v : sorted) edges.push_back({v, z});
  return {SimpleGraph(g.vertex_count() + 1, std::move(edges)), z};
}

inline bool is_connected(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace critplanar
