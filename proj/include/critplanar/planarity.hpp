#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critplanar/graph.hpp"

namespace critplanar {

/// Cyclic order of neighbors around each vertex. Successor in the list is the
/// counterclockwise next neighbor.
struct RotationSystem {
  std::vector<std::vector<VertexId>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct DirectedEdge {
  VertexId from = 0;
  VertexId to = 0;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// One face boundary as a closed walk of directed edges.
struct FaceWalk {
  std::vector<DirectedEdge> darts;

  std::size_t length() const noexcept { return darts.size(); }
};

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;
};

namespace detail {

// Left-right planarity test: DFS orientation, nesting-depth ordering, conflict
// pair constraints, then embedding from the sign of each back edge.
class LrPlanarity {
 public:
  explicit LrPlanarity(const SimpleGraph& g) : g_(g) {}

  std::optional<RotationSystem> run() {
    const std::size_t n = g_.vertex_count();
    const std::size_t m = g_.edge_count();
    if (n > 2 && m > 3 * n - 6) return std::nullopt;

    height_.assign(n, kNone);
    parent_edge_.assign(n, kNone);
    out_.assign(n, {});
    src_.reserve(m);
    dst_.reserve(m);
    oriented_.assign(m, 0);
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_.assign(m, 0);
    ref_.assign(m, kNone);
    side_.assign(m, 1);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, kNone);

    // undirected edge index per (vertex, neighbor slot)
    edge_index_.assign(n, {});
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = g_.edges()[i];
      edge_index_[idx(e.u)].emplace_back(e.v, static_cast<int>(i));
      edge_index_[idx(e.v)].emplace_back(e.u, static_cast<int>(i));
    }
    for (auto& list : edge_index_) std::sort(list.begin(), list.end());
    src_.assign(m, kNone);
    dst_.assign(m, kNone);

    for (std::size_t v = 0; v < n; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots_.push_back(static_cast<VertexId>(v));
        orient(static_cast<VertexId>(v));
      }
    }

    auto by_nesting = [this](int a, int b) { return nesting_[idx(a)] < nesting_[idx(b)]; };
    for (auto& list : out_) std::stable_sort(list.begin(), list.end(), by_nesting);

    for (VertexId r : roots_)
      if (!test(r)) return std::nullopt;

    for (std::size_t e = 0; e < m; ++e) nesting_[e] = sign(static_cast<int>(e)) * nesting_[e];
    for (auto& list : out_) std::stable_sort(list.begin(), list.end(), by_nesting);

    // clockwise cyclic lists as doubly linked rings keyed by neighbor
    cw_.assign(n, std::vector<VertexId>(n, kNone));
    ccw_.assign(n, std::vector<VertexId>(n, kNone));
    first_.assign(n, kNone);
    for (std::size_t v = 0; v < n; ++v) {
      VertexId prev = kNone;
      for (int e : out_[v]) {
        add_half_edge_cw(static_cast<VertexId>(v), dst_[idx(e)], prev);
        prev = dst_[idx(e)];
      }
    }
    left_ref_.assign(n, kNone);
    right_ref_.assign(n, kNone);
    for (VertexId r : roots_) embed(r);

    RotationSystem rot;
    rot.order.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (first_[v] == kNone) continue;
      // stored clockwise; emit counterclockwise
      VertexId w = first_[v];
      do {
        rot.order[v].push_back(w);
        w = ccw_[v][idx(w)];
      } while (w != first_[v]);
    }
    return rot;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };

  template <class T>
  static std::size_t idx(T v) { return static_cast<std::size_t>(v); }

  int edge_between(VertexId v, VertexId w) const {
    const auto& list = edge_index_[idx(v)];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<VertexId, int>{w, -1});
    return it->second;
  }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[idx(i.high)] > lowpt_[idx(b)]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[idx(p.right.low)];
    if (p.right.empty()) return lowpt_[idx(p.left.low)];
    return std::min(lowpt_[idx(p.left.low)], lowpt_[idx(p.right.low)]);
  }

  int top_marker() const { return stack_.empty() ? kNone : static_cast<int>(stack_.size()) - 1; }

  void orient(VertexId v) {
    const int e = parent_edge_[idx(v)];
    for (auto [w, ei] : edge_index_[idx(v)]) {
      if (oriented_[idx(ei)]) continue;
      oriented_[idx(ei)] = 1;
      src_[idx(ei)] = v;
      dst_[idx(ei)] = w;
      out_[idx(v)].push_back(ei);
      lowpt_[idx(ei)] = height_[idx(v)];
      lowpt2_[idx(ei)] = height_[idx(v)];
      if (height_[idx(w)] == kNone) {
        parent_edge_[idx(w)] = ei;
        height_[idx(w)] = height_[idx(v)] + 1;
        orient(w);
      } else {
        lowpt_[idx(ei)] = height_[idx(w)];
      }
      nesting_[idx(ei)] = 2 * lowpt_[idx(ei)];
      if (lowpt2_[idx(ei)] < height_[idx(v)]) nesting_[idx(ei)] += 1;
      if (e != kNone) {
        auto& le = lowpt_[idx(e)];
        auto& le2 = lowpt2_[idx(e)];
        if (lowpt_[idx(ei)] < le) {
          le2 = std::min(le, lowpt2_[idx(ei)]);
          le = lowpt_[idx(ei)];
        } else if (lowpt_[idx(ei)] > le) {
          le2 = std::min(le2, lowpt_[idx(ei)]);
        } else {
          le2 = std::min(le2, lowpt2_[idx(ei)]);
        }
      }
    }
  }

  bool test(VertexId v) {
    const int e = parent_edge_[idx(v)];
    const auto& outs = out_[idx(v)];
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const int ei = outs[i];
      const VertexId w = dst_[idx(ei)];
      stack_bottom_[idx(ei)] = top_marker();
      if (ei == parent_edge_[idx(w)]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[idx(ei)] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[idx(ei)] < height_[idx(v)]) {
        if (i == 0) {
          lowpt_edge_[idx(e)] = lowpt_edge_[idx(ei)];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[idx(q.right.low)] > lowpt_[idx(e)]) {
        if (p.right.empty()) p.right = q.right;
        else ref_[idx(p.right.low)] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[idx(q.right.low)] = lowpt_edge_[idx(e)];
      }
    } while (top_marker() != stack_bottom_[idx(ei)]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[idx(p.right.low)] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) p.left = q.left;
      else ref_[idx(p.left.low)] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const VertexId u = src_[idx(e)];
    while (!stack_.empty() && lowest(stack_.back()) == height_[idx(u)]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[idx(p.left.low)] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[idx(p.left.high)] == u) p.left.high = ref_[idx(p.left.high)];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[idx(p.left.low)] = p.right.low;
        side_[idx(p.left.low)] = -1;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[idx(p.right.high)] == u) p.right.high = ref_[idx(p.right.high)];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[idx(p.right.low)] = p.left.low;
        side_[idx(p.right.low)] = -1;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[idx(e)] < height_[idx(u)] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[idx(hl)] > lowpt_[idx(hr)])) ref_[idx(e)] = hl;
      else ref_[idx(e)] = hr;
    }
  }

  int sign(int e) {
    // iterative resolution of the ref chain
    std::vector<int> chain;
    while (ref_[idx(e)] != kNone) {
      chain.push_back(e);
      e = ref_[idx(e)];
    }
    int s = side_[idx(e)];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      side_[idx(*it)] *= s;
      s = side_[idx(*it)];
      ref_[idx(*it)] = kNone;
    }
    return s;
  }

  void add_half_edge_cw(VertexId v, VertexId w, VertexId ref) {
    if (ref == kNone) {
      cw_[idx(v)][idx(w)] = w;
      ccw_[idx(v)][idx(w)] = w;
      first_[idx(v)] = w;
      return;
    }
    const VertexId cw_ref = cw_[idx(v)][idx(ref)];
    cw_[idx(v)][idx(ref)] = w;
    cw_[idx(v)][idx(w)] = cw_ref;
    ccw_[idx(v)][idx(cw_ref)] = w;
    ccw_[idx(v)][idx(w)] = ref;
  }

  void add_half_edge_ccw(VertexId v, VertexId w, VertexId ref) {
    if (ref == kNone) {
      add_half_edge_cw(v, w, kNone);
      return;
    }
    add_half_edge_cw(v, w, ccw_[idx(v)][idx(ref)]);
    if (ref == first_[idx(v)]) first_[idx(v)] = w;
  }

  void add_half_edge_first(VertexId v, VertexId w) { add_half_edge_ccw(v, w, first_[idx(v)]); }

  void embed(VertexId v) {
    for (int ei : out_[idx(v)]) {
      const VertexId w = dst_[idx(ei)];
      if (ei == parent_edge_[idx(w)]) {
        add_half_edge_first(w, v);
        left_ref_[idx(v)] = w;
        right_ref_[idx(v)] = w;
        embed(w);
      } else if (side_[idx(ei)] == 1) {
        add_half_edge_cw(w, v, right_ref_[idx(w)]);
      } else {
        add_half_edge_ccw(w, v, left_ref_[idx(w)]);
        left_ref_[idx(w)] = v;
      }
    }
  }

  const SimpleGraph& g_;
  std::vector<std::vector<std::pair<VertexId, int>>> edge_index_;
  std::vector<int> height_, parent_edge_;
  std::vector<VertexId> roots_;
  std::vector<std::vector<int>> out_;
  std::vector<VertexId> src_, dst_;
  std::vector<char> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_, ref_, side_, lowpt_edge_, stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::vector<std::vector<VertexId>> cw_, ccw_;
  std::vector<VertexId> first_, left_ref_, right_ref_;
};

}  // namespace detail

inline PlanarityResult planarity_test(const SimpleGraph& g) {
  detail::LrPlanarity lr(g);
  auto rot = lr.run();
  if (!rot) return {false, std::nullopt};
  return {true, std::move(rot)};
}

/// Throws InconsistentRotation unless rot lists exactly each vertex's neighbors.
inline void validate_rotation(const SimpleGraph& g, const RotationSystem& rot) {
  if (rot.order.size() != g.vertex_count())
    throw Error(ErrorCode::InconsistentRotation, "rotation covers " + std::to_string(rot.order.size()) +
                                                     " vertices, graph has " + std::to_string(g.vertex_count()));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> sorted = rot.order[v];
    std::sort(sorted.begin(), sorted.end());
    auto nbrs = g.neighbors(static_cast<VertexId>(v));
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
      throw Error(ErrorCode::InconsistentRotation, "rotation at vertex " + std::to_string(v) +
                                                       " does not match its neighborhood");
  }
}

/// Traces faces: arriving at v from u, leave towards the successor of u in v's rotation.
inline std::vector<FaceWalk> enumerate_faces(const SimpleGraph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  const std::size_t n = g.vertex_count();
  // position of each neighbor within the rotation, and visited flag per dart
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) pos[v].emplace_back(rot.order[v][i], i);
    std::sort(pos[v].begin(), pos[v].end());
  }
  auto slot = [&](VertexId v, VertexId u) {
    const auto& p = pos[static_cast<std::size_t>(v)];
    return std::lower_bound(p.begin(), p.end(), std::pair<VertexId, std::size_t>{u, 0})->second;
  };
  std::vector<std::vector<char>> used(n);
  for (std::size_t v = 0; v < n; ++v) used[v].assign(rot.order[v].size(), 0);

  std::vector<FaceWalk> faces;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
      if (used[v][i]) continue;
      FaceWalk face;
      VertexId from = static_cast<VertexId>(v);
      std::size_t from_slot = i;
      while (!used[static_cast<std::size_t>(from)][from_slot]) {
        used[static_cast<std::size_t>(from)][from_slot] = 1;
        const VertexId to = rot.order[static_cast<std::size_t>(from)][from_slot];
        face.darts.push_back({from, to});
        const auto& around = rot.order[static_cast<std::size_t>(to)];
        from_slot = (slot(to, from) + 1) % around.size();
        from = to;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

/// V - E + F == 2 for the faces of rot.
inline bool euler_check(const SimpleGraph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "euler_check requires a connected graph");
  const auto v = static_cast<long>(g.vertex_count());
  const auto e = static_cast<long>(g.edge_count());
  // an isolated vertex has no darts but bounds one face
  const auto f = g.edge_count() == 0 ? 1L : static_cast<long>(enumerate_faces(g, rot).size());
  return v - e + f == 2;
}

/// True iff a,b,c appear consecutively, in either direction, along some face.
inline bool path_on_some_face(const SimpleGraph& g, const RotationSystem& rot, VertexId a, VertexId b, VertexId c) {
  if (!g.has_edge(a, b) || !g.has_edge(b, c))
    throw Error(ErrorCode::PathEdgesMissing, "path " + std::to_string(a) + "-" + std::to_string(b) + "-" +
                                                 std::to_string(c) + " is not a path of the graph");
  for (const auto& face : enumerate_faces(g, rot)) {
    const std::size_t len = face.length();
    for (std::size_t i = 0; i < len; ++i) {
      const auto& d1 = face.darts[i];
      const auto& d2 = face.darts[(i + 1) % len];
      if (d1.to != d2.from) continue;
      if ((d1.from == a && d1.to == b && d2.to == c) || (d1.from == c && d1.to == b && d2.to == a)) return true;
    }
  }
  return false;
}

}  // namespace critplanar
