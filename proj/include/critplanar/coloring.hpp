#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "critplanar/graph.hpp"

namespace critplanar {

using Color = std::int32_t;

/// Colors pinned before the search starts.
struct PartialColoring {
  std::map<VertexId, Color> assigned;

  bool empty() const noexcept { return assigned.empty(); }
};

/// Total vertex -> color map.
struct Coloring {
  std::vector<Color> colors;

  Color operator[](VertexId v) const { return colors.at(static_cast<std::size_t>(v)); }
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct SolverOptions {
  /// Exact coloring is exponential; larger inputs are refused unless raised.
  std::size_t max_vertices = 128;
};

inline bool is_proper(const SimpleGraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

namespace detail {

inline void check_size(const SimpleGraph& g, const SolverOptions& opts) {
  if (g.vertex_count() > opts.max_vertices)
    throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(g.vertex_count()) +
                                         " vertices; solver limit is " + std::to_string(opts.max_vertices));
}

// Backtracking with most-saturated-first selection; ties go to the lowest id.
class SaturationSearch {
 public:
  SaturationSearch(const SimpleGraph& g, int k, bool break_symmetry)
      : g_(g), k_(k), break_symmetry_(break_symmetry), color_(g.vertex_count(), -1),
        count_(g.vertex_count() * static_cast<std::size_t>(k), 0), mask_(g.vertex_count(), 0) {}

  void pin(VertexId v, Color c) {
    assign(v, c);
    ++assigned_;
  }

  std::optional<Coloring> solve() {
    if (!search(-1)) return std::nullopt;
    return Coloring{color_};
  }

 private:
  std::size_t at(VertexId v) const { return static_cast<std::size_t>(v); }

  void assign(VertexId v, Color c) {
    color_[at(v)] = c;
    for (VertexId w : g_.neighbors(v)) {
      if (count_[at(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]++ == 0)
        mask_[at(w)] |= std::uint64_t{1} << c;
    }
  }

  void unassign(VertexId v) {
    const Color c = color_[at(v)];
    color_[at(v)] = -1;
    for (VertexId w : g_.neighbors(v)) {
      if (--count_[at(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] == 0)
        mask_[at(w)] &= ~(std::uint64_t{1} << c);
    }
  }

  bool search(Color max_used) {
    if (assigned_ == g_.vertex_count()) return true;
    VertexId best = -1;
    int best_sat = -1;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] != -1) continue;
      const int sat = std::popcount(mask_[v]);
      if (sat > best_sat) {
        best_sat = sat;
        best = static_cast<VertexId>(v);
      }
    }
    if (best_sat >= k_) return false;
    for (Color c = 0; c < k_; ++c) {
      if (break_symmetry_ && c > max_used + 1) break;
      if (mask_[at(best)] & (std::uint64_t{1} << c)) continue;
      assign(best, c);
      ++assigned_;
      if (search(std::max(max_used, c))) return true;
      --assigned_;
      unassign(best);
    }
    return false;
  }

  const SimpleGraph& g_;
  int k_;
  bool break_symmetry_;
  std::vector<Color> color_;
  std::vector<int> count_;
  std::vector<std::uint64_t> mask_;
  std::size_t assigned_ = 0;
};

}  // namespace detail

/// Proper k-coloring extending `fixed`, or nullopt if none exists.
inline std::optional<Coloring> find_k_coloring(const SimpleGraph& g, int k, const PartialColoring& fixed = {},
                                               const SolverOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  detail::check_size(g, opts);
  for (const auto& [v, c] : fixed.assigned) {
    require_vertex(g, v);
    if (c < 0 || c >= k)
      throw Error(ErrorCode::ImproperFixedAssignment,
                  "vertex " + std::to_string(v) + " fixed to color " + std::to_string(c) + " outside 0.." +
                      std::to_string(k - 1));
  }
  for (const auto& e : g.edges()) {
    auto a = fixed.assigned.find(e.u), b = fixed.assigned.find(e.v);
    if (a != fixed.assigned.end() && b != fixed.assigned.end() && a->second == b->second)
      throw Error(ErrorCode::ImproperFixedAssignment, "adjacent vertices " + to_string(e) + " fixed to the same color");
  }
  if (g.vertex_count() == 0) return Coloring{};
  // colors beyond n are never needed, except those pinned by `fixed`
  std::size_t search_k = g.vertex_count();
  for (const auto& [v, c] : fixed.assigned) search_k = std::max(search_k, static_cast<std::size_t>(c) + 1);
  search_k = std::min(search_k, static_cast<std::size_t>(k));
  if (search_k > 64) throw Error(ErrorCode::TooLarge, "at most 64 distinct colors are supported");

  detail::SaturationSearch search(g, static_cast<int>(search_k), fixed.empty());
  for (const auto& [v, c] : fixed.assigned) search.pin(v, c);
  auto result = search.solve();
  if (result) {
    if (!is_proper(g, *result)) throw std::logic_error("solver produced an improper coloring");
    for (const auto& [v, c] : fixed.assigned)
      if ((*result)[v] != c) throw std::logic_error("solver dropped a fixed color");
  }
  return result;
}

inline bool is_k_colorable(const SimpleGraph& g, int k, const SolverOptions& opts = {}) {
  return find_k_coloring(g, k, {}, opts).has_value();
}

/// Least k <= max_k admitting a proper coloring; BoundExceeded otherwise.
inline int chromatic_number(const SimpleGraph& g, int max_k, const SolverOptions& opts = {}) {
  if (g.vertex_count() == 0) throw std::invalid_argument("chromatic number of the empty graph");
  if (max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  for (int k = 1; k <= max_k; ++k)
    if (is_k_colorable(g, k, opts)) return k;
  throw Error(ErrorCode::BoundExceeded, "chromatic number exceeds " + std::to_string(max_k));
}

/// Whether every proper k-coloring of g - e gives both endpoints of e the same color.
inline bool forced_equal(const SimpleGraph& g, Edge e, int k, const SolverOptions& opts = {}) {
  const SimpleGraph without = remove_edge(g, e);
  if (!is_k_colorable(without, k, opts))
    throw Error(ErrorCode::PreconditionUncolorable,
                "g - " + to_string(make_edge(e.u, e.v)) + " is not " + std::to_string(k) + "-colorable");
  // a coloring of g - e separating the endpoints is exactly a coloring of g
  return !is_k_colorable(g, k, opts);
}

/// Every proper k-coloring in lexicographic order (vertex 0 most significant).
/// Without a cap, graphs above 20 vertices are refused.
inline std::vector<Coloring> enumerate_k_colorings(const SimpleGraph& g, int k,
                                                   std::optional<std::size_t> cap = std::nullopt) {
  const std::size_t n = g.vertex_count();
  if (!cap && n > 20)
    throw Error(ErrorCode::TooLarge, "enumeration over " + std::to_string(n) + " vertices needs an explicit cap");
  std::vector<Coloring> out;
  std::vector<Color> color(n, -1);
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      if (cap && out.size() == *cap)
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(*cap) + " colorings");
      out.push_back(Coloring{color});
      return;
    }
    for (Color c = 0; c < k; ++c) {
      bool ok = true;
      for (VertexId w : g.neighbors(static_cast<VertexId>(v)))
        if (static_cast<std::size_t>(w) < v && color[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
    }
    color[v] = -1;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace critplanar
