#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critplanar/graph.hpp"
#include "critplanar/planarity.hpp"

namespace critplanar {

/// Ordered two-edge path a-b-c inside one operand. Operators consume it as
/// given: ring and g3 delete bc, g4 deletes ab.
struct FacePath {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  friend auto operator<=>(const FacePath&, const FacePath&) = default;
};

struct Operand {
  SimpleGraph graph;
  FacePath path;
};

/// Edge handle for the Hajos join: `identified` is merged across operands,
/// `joined` receives the new cross edge.
struct JoinEdge {
  VertexId identified = 0;
  VertexId joined = 0;
};

/// A composed graph together with where every operand vertex ended up.
struct ComposedGraph {
  SimpleGraph graph;
  std::vector<VertexMap> operand_maps;
  std::optional<VertexId> apex;
  /// Edges that exist in no operand (apex spokes and cross edges), result ids.
  std::vector<Edge> added_edges;
  std::vector<std::string> warnings;
};

struct RingOptions {
  /// Even rings are not critical in general; permitted only for experiments.
  bool allow_even = false;
};

inline std::string to_string(const FacePath& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
}

inline void validate_face_path(const SimpleGraph& g, const FacePath& p, std::size_t operand) {
  const std::string where = "operand " + std::to_string(operand) + " path " + to_string(p);
  if (!g.contains(p.a) || !g.contains(p.b) || !g.contains(p.c))
    throw Error(ErrorCode::InvalidFacePath, where + " names a vertex outside the operand");
  if (p.a == p.b || p.b == p.c || p.a == p.c)
    throw Error(ErrorCode::InvalidFacePath, where + " repeats a vertex");
  if (!g.has_edge(p.a, p.b) || !g.has_edge(p.b, p.c))
    throw Error(ErrorCode::InvalidFacePath, where + " uses a missing edge");
}

/// Warning text when the path cannot be confirmed on a face of the computed embedding.
inline std::optional<std::string> face_precondition_warning(const SimpleGraph& g, const FacePath& p,
                                                            std::size_t operand) {
  const std::string where = "operand " + std::to_string(operand) + " path " + to_string(p);
  auto planar = planarity_test(g);
  if (!planar.planar) return where + ": operand is not planar";
  if (!path_on_some_face(g, *planar.embedding, p.a, p.b, p.c))
    return where + ": precondition unverified in computed embedding";
  return std::nullopt;
}

namespace detail {

// Surgery plan over the disjoint union of the operands, in union ids.
struct CompositionPlan {
  std::vector<Edge> deletions;
  std::vector<std::pair<VertexId, VertexId>> identifications;
  std::optional<std::vector<VertexId>> apex_neighbors;
  std::vector<Edge> additions;
};

inline ComposedGraph compose(std::span<const SimpleGraph> operands, const CompositionPlan& plan) {
  auto [united, union_maps] = disjoint_union(operands);
  SimpleGraph g = std::move(united);
  for (const auto& e : plan.deletions) g = remove_edge(g, e);

  for (auto [x, y] : plan.identifications)
    if (g.has_edge(x, y))
      throw Error(ErrorCode::IdentificationCollision,
                  "vertices to identify are adjacent: " + to_string(make_edge(x, y)));
  VertexMap merge;
  try {
    auto merged = identify_pairs(g, plan.identifications);
    g = std::move(merged.first);
    merge = std::move(merged.second);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SelfLoopWouldForm) throw;
    throw Error(ErrorCode::IdentificationCollision, e.what());
  }

  ComposedGraph out;
  for (const auto& m : union_maps) out.operand_maps.push_back(m.then(merge));
  if (plan.apex_neighbors) {
    std::vector<VertexId> nbrs;
    for (VertexId v : *plan.apex_neighbors) nbrs.push_back(merge(v));
    auto [grown, z] = add_vertex_with_edges(g, nbrs);
    g = std::move(grown);
    out.apex = z;
    for (VertexId v : nbrs) out.added_edges.push_back(make_edge(v, z));
  }
  for (const auto& e : plan.additions) {
    const Edge mapped = make_edge(merge(e.u), merge(e.v));
    if (g.has_edge(mapped))
      throw Error(ErrorCode::CrossEdgeExists, "new edge " + to_string(mapped) + " already present");
    g = add_edge(g, mapped);
    out.added_edges.push_back(mapped);
  }
  std::sort(out.added_edges.begin(), out.added_edges.end());
  out.graph = std::move(g);
  return out;
}

inline void collect_face_warnings(ComposedGraph& out, std::span<const Operand> operands) {
  for (std::size_t i = 0; i < operands.size(); ++i)
    if (auto w = face_precondition_warning(operands[i].graph, operands[i].path, i)) out.warnings.push_back(*w);
}

}  // namespace detail

/// Ring composition with apex: per operand delete bc, identify each c with the
/// next operand's a (cyclically), then join a new apex to every b.
inline ComposedGraph ring_compose(std::span<const Operand> operands, const RingOptions& opts = {}) {
  const std::size_t m = operands.size();
  if (m < 2 || (m % 2 == 0 && !opts.allow_even))
    throw Error(ErrorCode::EvenOperandCount,
                "odd operand count required (at least 3), got " + std::to_string(m));
  std::vector<SimpleGraph> graphs;
  for (std::size_t i = 0; i < m; ++i) {
    validate_face_path(operands[i].graph, operands[i].path, i);
    graphs.push_back(operands[i].graph);
  }
  std::vector<VertexId> offset(m, 0);
  for (std::size_t i = 1; i < m; ++i)
    offset[i] = offset[i - 1] + static_cast<VertexId>(operands[i - 1].graph.vertex_count());

  detail::CompositionPlan plan;
  plan.apex_neighbors.emplace();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = operands[i].path;
    const std::size_t next = (i + 1) % m;
    plan.deletions.push_back(make_edge(offset[i] + p.b, offset[i] + p.c));
    plan.identifications.emplace_back(offset[i] + p.c, offset[next] + operands[next].path.a);
    plan.apex_neighbors->push_back(offset[i] + p.b);
  }
  auto out = detail::compose(graphs, plan);
  detail::collect_face_warnings(out, operands);
  return out;
}

/// Two-operand composition: delete bc in both, merge the two a's, join an
/// apex to the merged a and both b's, and connect the two c's.
inline ComposedGraph g3_compose(const SimpleGraph& g1, const FacePath& p1, const SimpleGraph& g2,
                                const FacePath& p2) {
  validate_face_path(g1, p1, 0);
  validate_face_path(g2, p2, 1);
  const auto off = static_cast<VertexId>(g1.vertex_count());
  detail::CompositionPlan plan;
  plan.deletions = {make_edge(p1.b, p1.c), make_edge(off + p2.b, off + p2.c)};
  plan.identifications = {{p1.a, off + p2.a}};
  plan.apex_neighbors = std::vector<VertexId>{p1.a, p1.b, off + p2.b};
  plan.additions = {make_edge(p1.c, off + p2.c)};
  const std::vector<SimpleGraph> graphs{g1, g2};
  auto out = detail::compose(graphs, plan);
  const std::vector<Operand> operands{{g1, p1}, {g2, p2}};
  detail::collect_face_warnings(out, operands);
  return out;
}

/// Two-operand composition without identification: delete ab in both, then
/// add a1a2, b1c2, c1b2 and c1c2.
inline ComposedGraph g4_compose(const SimpleGraph& g1, const FacePath& p1, const SimpleGraph& g2,
                                const FacePath& p2) {
  validate_face_path(g1, p1, 0);
  validate_face_path(g2, p2, 1);
  const auto off = static_cast<VertexId>(g1.vertex_count());
  detail::CompositionPlan plan;
  plan.deletions = {make_edge(p1.a, p1.b), make_edge(off + p2.a, off + p2.b)};
  plan.additions = {make_edge(p1.a, off + p2.a), make_edge(p1.b, off + p2.c), make_edge(p1.c, off + p2.b),
                    make_edge(p1.c, off + p2.c)};
  const std::vector<SimpleGraph> graphs{g1, g2};
  auto out = detail::compose(graphs, plan);
  const std::vector<Operand> operands{{g1, p1}, {g2, p2}};
  detail::collect_face_warnings(out, operands);
  return out;
}

/// Hajos join: delete both edges, merge the identified endpoints, join the others.
inline ComposedGraph hajos_join(const SimpleGraph& g1, const JoinEdge& e1, const SimpleGraph& g2,
                                const JoinEdge& e2) {
  if (!g1.has_edge(e1.identified, e1.joined))
    throw Error(ErrorCode::EdgeAbsent, "operand 0 lacks edge " + to_string(make_edge(e1.identified, e1.joined)));
  if (!g2.has_edge(e2.identified, e2.joined))
    throw Error(ErrorCode::EdgeAbsent, "operand 1 lacks edge " + to_string(make_edge(e2.identified, e2.joined)));
  const auto off = static_cast<VertexId>(g1.vertex_count());
  detail::CompositionPlan plan;
  plan.deletions = {make_edge(e1.identified, e1.joined), make_edge(off + e2.identified, off + e2.joined)};
  plan.identifications = {{e1.identified, off + e2.identified}};
  plan.additions = {make_edge(e1.joined, off + e2.joined)};
  const std::vector<SimpleGraph> graphs{g1, g2};
  return detail::compose(graphs, plan);
}

// Seed graphs

inline SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(make_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)));
  return SimpleGraph::from_pairs_collapsing(n, std::move(edges));
}

inline SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return SimpleGraph(n, std::move(edges));
}

/// Rim 0..rim-1 in cyclic order, hub = rim.
inline SimpleGraph wheel_graph(std::size_t rim) {
  std::vector<VertexId> hub_nbrs(rim);
  std::iota(hub_nbrs.begin(), hub_nbrs.end(), VertexId{0});
  return add_vertex_with_edges(cycle_graph(rim), hub_nbrs).first;
}

inline SimpleGraph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(left + j)});
  return SimpleGraph(left + right, std::move(edges));
}

inline SimpleGraph catalog_k4() { return complete_graph(4); }
inline SimpleGraph catalog_w5() { return wheel_graph(5); }

/// Ring of 2k+1 copies of K4, each gripped by the path 0-1-2.
inline ComposedGraph k4_ring_family(int k) {
  if (k < 1) throw std::invalid_argument("k4 ring family needs k >= 1");
  std::vector<Operand> operands(static_cast<std::size_t>(2 * k + 1), Operand{catalog_k4(), FacePath{0, 1, 2}});
  return ring_compose(operands);
}

}  // namespace critplanar
